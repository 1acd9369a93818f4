#include "conicnet/audit.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace conicnet {

namespace {

using json = nlohmann::json;

struct Shard {
  int pattern = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

struct ShardResult {
  std::vector<std::uint64_t> counts;
  std::vector<std::string> notes;
};

constexpr std::size_t kMaxNotesPerShard = 4;

std::vector<Shard> make_shards(const SubspaceEnumerator& en, std::uint64_t shard_size) {
  std::vector<Shard> shards;
  if (shard_size == 0) shard_size = 1;
  for (int p = 0; p < en.pattern_count(); ++p) {
    const auto [b, e] = en.pattern_range(p);
    for (std::uint64_t s = b; s < e; s += shard_size) shards.push_back({p, s, std::min(e, s + shard_size)});
  }
  return shards;
}

class Checkpoint {
 public:
  Checkpoint(std::string path, std::string kind, int q, std::uint64_t shard_size)
      : path_(std::move(path)), kind_(std::move(kind)), q_(q), shard_size_(shard_size) {}

  bool enabled() const { return !path_.empty(); }

  /// Shard results already on disk, keyed by shard begin offset.
  std::map<std::uint64_t, std::pair<Shard, ShardResult>> load() const {
    std::map<std::uint64_t, std::pair<Shard, ShardResult>> out;
    if (!enabled() || !std::filesystem::exists(path_)) return out;
    std::ifstream in(path_);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedInput, "unreadable checkpoint " + path_ + ": " + e.what());
    }
    if (doc.value("kind", "") != kind_ || doc.value("q", 0) != q_ || doc.value("shard_size", 0ULL) != shard_size_)
      throw Error(ErrorCode::MalformedInput, "checkpoint " + path_ + " belongs to a different run");
    for (const auto& s : doc.at("shards")) {
      Shard sh{s.at("pattern").get<int>(), s.at("begin").get<std::uint64_t>(), s.at("end").get<std::uint64_t>()};
      ShardResult r{s.at("counts").get<std::vector<std::uint64_t>>(), s.at("notes").get<std::vector<std::string>>()};
      out[sh.begin] = {sh, std::move(r)};
    }
    return out;
  }

  void save(const std::map<std::uint64_t, std::pair<Shard, ShardResult>>& done) const {
    if (!enabled()) return;
    json doc = {{"schema", 1}, {"kind", kind_}, {"q", q_}, {"shard_size", shard_size_}, {"shards", json::array()}};
    for (const auto& [begin, entry] : done) {
      const auto& [sh, r] = entry;
      doc["shards"].push_back(
          {{"pattern", sh.pattern}, {"begin", sh.begin}, {"end", sh.end}, {"counts", r.counts}, {"notes", r.notes}});
    }
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp);
      out << doc.dump() << "\n";
    }
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::string path_;
  std::string kind_;
  int q_;
  std::uint64_t shard_size_;
};

// Runs work over every shard on options.workers threads and returns the
// per-shard results in shard order.
std::vector<ShardResult> run_sharded(const SubspaceEnumerator& en, const AuditOptions& options, const std::string& kind,
                                     int q, std::size_t ncounts,
                                     const std::function<void(std::uint64_t, std::uint64_t, ShardResult&)>& work,
                                     AuditReport& report) {
  const std::vector<Shard> shards = make_shards(en, options.shard_size);
  const Checkpoint checkpoint(options.checkpoint_path, kind, q, options.shard_size);
  auto done = checkpoint.load();
  std::vector<ShardResult> results(shards.size());
  std::vector<char> have(shards.size(), 0);
  for (std::size_t i = 0; i < shards.size(); ++i) {
    auto it = done.find(shards[i].begin);
    if (it == done.end()) continue;
    if (it->second.first.end != shards[i].end || it->second.second.counts.size() != ncounts)
      throw Error(ErrorCode::MalformedInput, "checkpoint shard layout does not match this run");
    results[i] = it->second.second;
    have[i] = 1;
    ++report.shards_resumed;
  }
  report.shards = shards.size();

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t finished = report.shards_resumed;
  std::exception_ptr failure;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      if (have[i]) continue;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
      }
      ShardResult r;
      r.counts.assign(ncounts, 0);
      try {
        work(shards[i].begin, shards[i].end, r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      results[i] = r;
      ++finished;
      if (checkpoint.enabled()) {
        done[shards[i].begin] = {shards[i], std::move(r)};
        checkpoint.save(done);
      }
      if (options.progress) options.progress(finished, shards.size());
    }
  };
  const int nworkers = std::max(1, options.workers);
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void add_note(ShardResult& r, const std::string& note) {
  if (r.notes.size() < kMaxNotesPerShard) r.notes.push_back(note);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool orbit_checks_enabled(const AuditOptions& options, int q) { return options.orbit_checks.value_or(q <= 5); }

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

std::string AuditReport::to_csv() const {
  std::ostringstream out;
  out << "label,tally,expected_orbit_size,stabilizer_order,consistent\n";
  for (const auto& r : rows)
    out << csv_escape(r.label) << ',' << r.tally << ',' << r.expected_orbit_size << ',' << r.stabilizer_order << ','
        << (r.consistent ? "true" : "false") << '\n';
  return out.str();
}

std::string AuditReport::to_json() const {
  json doc = {{"schema", 1}, {"kind", kind}, {"q", q}, {"scanned", scanned}, {"ok", ok()}, {"shards", shards}};
  doc["rows"] = json::array();
  for (const auto& r : rows)
    doc["rows"].push_back({{"label", r.label},
                           {"tally", r.tally},
                           {"expected_orbit_size", r.expected_orbit_size},
                           {"stabilizer_order", r.stabilizer_order},
                           {"consistent", r.consistent}});
  doc["counters"] = json::object();
  for (const auto& [k, v] : counters) doc["counters"][k] = v;
  doc["violations"] = violations;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- planes

AuditReport audit_planes(const FieldPtr& field, const AuditOptions& options) {
  const auto t0 = Clock::now();
  const Field& f = *field;
  const int q = f.q();
  AuditReport rep;
  rep.kind = "planes";
  rep.q = q;

  // counts: [0,16) labels, then missing, n1_bad, b_lt_q, inconsistent
  constexpr std::size_t kMissing = kPlaneLabelCount, kN1 = kMissing + 1, kBq = kMissing + 2, kBad = kMissing + 3;
  const SubspaceEnumerator en(field, 5, 2);
  PointClassTable::get(field);
  ProjectivePlane::get(field);
  const auto shards = run_sharded(
      en, options, rep.kind, q, kBad + 1,
      [&](std::uint64_t b, std::uint64_t e, ShardResult& r) {
        for (std::uint64_t i = b; i < e; ++i) {
          const Subspace s = en.at(i);
          std::optional<PlaneLabel> label;
          OrbitDistribution d;
          try {
            const PlaneReport pr = classify_plane(field, s, {.trace = false});
            label = pr.label;
            d = pr.distribution;
          } catch (const Error& err) {
            if (err.code() != ErrorCode::InternalInconsistency) throw;
            ++r.counts[kBad];
            add_note(r, "plane " + std::to_string(i) + ": " + err.what());
            d = distribution(field, s);
          }
          const std::uint64_t n1 = d.n[0];
          if (!(n1 <= 3 || n1 == static_cast<std::uint64_t>(q) + 1)) {
            ++r.counts[kN1];
            add_note(r, "plane " + std::to_string(i) + " has n1 = " + std::to_string(n1));
          }
          if (n1 == 2 && d.n[1] + d.n[2] < static_cast<std::uint64_t>(q)) {
            ++r.counts[kBq];
            add_note(r, "plane " + std::to_string(i) + " has two rank-1 points and distribution " + d.to_string());
          }
          if (label) {
            ++r.counts[static_cast<int>(*label)];
          } else if (d.n[0] == 0) {
            ++r.counts[kMissing];
          }
        }
      },
      rep);

  std::vector<std::uint64_t> total(kBad + 1, 0);
  for (const auto& s : shards) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += s.counts[k];
    for (const auto& n : s.notes) rep.violations.push_back(n);
  }
  rep.scanned = en.count();
  rep.counters["planes_missing_veronesean"] = total[kMissing];
  rep.counters["n1_out_of_range"] = total[kN1];
  rep.counters["lemma_b_lt_q_violations"] = total[kBq];
  rep.counters["internal_inconsistency"] = total[kBad];
  std::uint64_t meeting = 0;
  int present = 0;
  const std::uint64_t group = pgl3_order(q);
  for (PlaneLabel l : all_plane_labels()) {
    const std::uint64_t tally = total[static_cast<int>(l)];
    meeting += tally;
    if (tally > 0) ++present;
    if (!plane_label_available(l, q)) {
      if (tally > 0) rep.violations.push_back(to_string(l) + " occurs although it is unavailable for q = " + std::to_string(q));
      continue;
    }
    LabelTally row;
    row.label = to_string(l);
    row.tally = tally;
    row.stabilizer_order = stabilizer_order(field, plane_representative(field, l).subspace);
    row.expected_orbit_size = group / row.stabilizer_order;
    row.consistent = row.tally == row.expected_orbit_size && group % row.stabilizer_order == 0;
    if (!row.consistent)
      rep.violations.push_back(row.label + ": tally " + std::to_string(row.tally) + " != orbit size " +
                               std::to_string(row.expected_orbit_size));
    rep.rows.push_back(row);
  }
  rep.counters["planes_meeting_veronesean"] = meeting;
  rep.counters["labels_present"] = static_cast<std::uint64_t>(present);
  if (present != 15) rep.violations.push_back(std::to_string(present) + " plane labels occur, expected 15");
  if (rep.scanned != subspace_count(5, 2, q)) rep.violations.push_back("plane count differs from the Gaussian binomial");
  if (total[kMissing] + meeting != rep.scanned) rep.violations.push_back("classified planes do not add up to the total");
  for (const char* k : {"n1_out_of_range", "lemma_b_lt_q_violations", "internal_inconsistency"})
    if (rep.counters[k] > 0 && rep.violations.empty()) rep.violations.push_back(std::string(k) + " is nonzero");
  rep.seconds = since(t0);
  return rep;
}

// ----------------------------------------------------------------- lines

AuditReport audit_lines(const FieldPtr& field, const AuditOptions& options) {
  const auto t0 = Clock::now();
  const int q = field->q();
  AuditReport rep;
  rep.kind = "lines";
  rep.q = q;
  constexpr std::size_t kBad = kLineLabelCount;
  const SubspaceEnumerator en(field, 5, 1);
  PointClassTable::get(field);
  const auto shards = run_sharded(
      en, options, rep.kind, q, kBad + 1,
      [&](std::uint64_t b, std::uint64_t e, ShardResult& r) {
        for (std::uint64_t i = b; i < e; ++i) {
          try {
            ++r.counts[static_cast<int>(classify_line(field, en.at(i)).label)];
          } catch (const Error& err) {
            if (err.code() != ErrorCode::InternalInconsistency) throw;
            ++r.counts[kBad];
            add_note(r, "line " + std::to_string(i) + ": " + err.what());
          }
        }
      },
      rep);
  std::vector<std::uint64_t> total(kBad + 1, 0);
  for (const auto& s : shards) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += s.counts[k];
    for (const auto& n : s.notes) rep.violations.push_back(n);
  }
  rep.scanned = en.count();
  rep.counters["internal_inconsistency"] = total[kBad];

  const std::uint64_t group = pgl3_order(q);
  int present = 0;
  for (LineLabel l : all_line_labels()) {
    const auto rline = line_representative(field, l);
    LabelTally row;
    row.label = to_string(l);
    row.tally = total[static_cast<int>(l)];
    row.stabilizer_order = stabilizer_order(field, rline.subspace);
    row.expected_orbit_size = group / row.stabilizer_order;
    const bool dist_ok = distribution(field, rline.subspace) == expected_line_distribution(l, q);
    row.consistent = row.tally == row.expected_orbit_size && dist_ok;
    if (row.tally > 0) ++present;
    if (!dist_ok) rep.violations.push_back(row.label + ": representative distribution differs from the table");
    if (row.tally != row.expected_orbit_size)
      rep.violations.push_back(row.label + ": tally " + std::to_string(row.tally) + " != orbit size " +
                               std::to_string(row.expected_orbit_size));
    rep.rows.push_back(row);
  }
  rep.counters["labels_present"] = static_cast<std::uint64_t>(present);
  if (present != 15) rep.violations.push_back(std::to_string(present) + " line labels occur, expected 15");
  if (total[kBad] > 0 && rep.violations.empty()) rep.violations.push_back("internal_inconsistency is nonzero");

  if (orbit_checks_enabled(options, q)) {
    const OrbitPartition part = orbit_partition(field, 1);
    rep.counters["partition_orbits"] = part.sizes.size();
    std::vector<int> label_of_orbit(part.sizes.size(), -1);
    std::uint64_t split = 0;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      int label = -1;
      try {
        label = static_cast<int>(classify_line(field, en.at(i)).label);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::InternalInconsistency) throw;
      }
      int& slot = label_of_orbit[part.orbit[i]];
      if (slot == -1) slot = label;
      if (slot != label) ++split;
    }
    rep.counters["orbits_with_mixed_labels"] = split;
    if (split > 0) rep.violations.push_back("classify_line is not constant on " + std::to_string(split) + " orbit members");
    if (part.sizes.size() != 15)
      rep.violations.push_back("generator partition has " + std::to_string(part.sizes.size()) + " orbits, expected 15");
    for (std::size_t o = 0; o < part.sizes.size(); ++o) {
      const int l = label_of_orbit[o];
      if (l >= 0 && part.sizes[o] != total[l])
        rep.violations.push_back("orbit of " + to_string(static_cast<LineLabel>(l)) + " has size " +
                                 std::to_string(part.sizes[o]) + " but the label tally is " + std::to_string(total[l]));
    }
  }
  rep.seconds = since(t0);
  return rep;
}

// ---------------------------------------------------------------- points

AuditReport audit_points(const FieldPtr& field, const AuditOptions& options) {
  const auto t0 = Clock::now();
  const Field& f = *field;
  const int q = f.q();
  const auto Q = static_cast<std::uint64_t>(q);
  AuditReport rep;
  rep.kind = "points";
  rep.q = q;
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t scanned = 0;
  std::vector<Coords> identity(6);
  for (int i = 0; i < 6; ++i) identity[i][i] = f.one();
  for_each_point(f, Subspace::from_rows(f, 6, identity), [&](std::span<const Elem>, std::span<const Elem> y) {
    ++counts[static_cast<int>(classify_point(f, y))];
    ++scanned;
  });
  rep.scanned = scanned;
  const std::uint64_t n1 = Q * Q + Q + 1;
  const std::array<std::uint64_t, 4> expected = {n1, n1 * Q * (Q + 1) / 2, n1 * Q * (Q - 1) / 2, Q * Q * (Q * Q * Q - 1)};
  const Elem one = f.one();
  const Elem eps = f.canonical_nonsquare();
  const std::array<Sym3, 4> reps = {Sym3{one}, Sym3{one, {}, {}, f.neg(one)}, Sym3{one, {}, {}, f.neg(eps)},
                                    Sym3{one, {}, {}, one, {}, one}};
  const bool small_group = pgl3_order(q) <= kWitnessFullScanLimit;
  for (int c = 0; c < 4; ++c) {
    LabelTally row;
    row.label = to_string(static_cast<PointClass>(c));
    row.tally = counts[c];
    row.expected_orbit_size = expected[c];
    const Subspace pt = Subspace::from_rows(f, 6, std::span<const Coords>(&reps[c], 1));
    row.stabilizer_order = small_group ? stabilizer_order(field, pt) : 0;
    row.consistent = row.tally == row.expected_orbit_size &&
                     (!small_group || row.stabilizer_order * row.expected_orbit_size == pgl3_order(q));
    if (!row.consistent) rep.violations.push_back(row.label + ": count or stabilizer disagrees with the closed form");
    rep.rows.push_back(row);
  }
  if (orbit_checks_enabled(options, q)) {
    // The orbit of diag(1,-1,0) (resp. diag(1,-eps,0)) must be exactly the
    // set of points the predicate calls P2e (resp. P2i).
    for (int c = 1; c <= 2; ++c) {
      const Subspace pt = Subspace::from_rows(f, 6, std::span<const Coords>(&reps[c], 1));
      const auto orbit = orbit_of(field, pt);
      std::uint64_t wrong = 0;
      for (const auto& s : orbit)
        if (classify_point(f, s.row(0)) != static_cast<PointClass>(c)) ++wrong;
      const std::string name = to_string(static_cast<PointClass>(c));
      rep.counters["orbit_size_" + name] = orbit.size();
      rep.counters["orbit_misclassified_" + name] = wrong;
      if (wrong > 0 || orbit.size() != counts[c])
        rep.violations.push_back("orbit of the " + name + " representative differs from the predicate set");
    }
  }
  rep.seconds = since(t0);
  return rep;
}

// ----------------------------------------------------------------- conic

AuditReport audit_conic(const FieldPtr& field, const AuditOptions& options) {
  const auto t0 = Clock::now();
  const Field& f = *field;
  const int q = f.q();
  const auto Q = static_cast<std::uint64_t>(q);
  AuditReport rep;
  rep.kind = "conic";
  rep.q = q;
  const Elem one = f.one();
  const std::array<Elem, 6> form = {Elem{}, Elem{}, one, f.neg(one), Elem{}, Elem{}};
  const Conic2 conic = Conic2::from_form(f, form);
  const auto plane = ProjectivePlane::get(field);
  const auto& pts = plane->points();

  std::vector<ConicPointClass> pclass(pts.size());
  std::array<std::uint64_t, 3> pc{};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pclass[i] = conic_point_class(f, conic, pts[i]);
    ++pc[static_cast<int>(pclass[i])];
  }
  std::array<std::uint64_t, 3> lc{};
  std::vector<int> tangents_through(pts.size(), 0);
  for (int l = 0; l < plane->size(); ++l) {
    const Subspace line = line_from_coords(f, plane->lines()[l].coords());
    const ConicLineClass c = conic_line_class(f, conic, line);
    ++lc[static_cast<int>(c)];
    if (c == ConicLineClass::Tangent)
      for (int i : plane->points_on_line(l)) ++tangents_through[i];
  }
  rep.scanned = pts.size();
  const std::array<std::pair<const char*, std::pair<std::uint64_t, std::uint64_t>>, 6> count_rows = {{
      {"On", {pc[0], Q + 1}},
      {"External", {pc[1], Q * (Q + 1) / 2}},
      {"Internal", {pc[2], Q * (Q - 1) / 2}},
      {"Tangent", {lc[0], Q + 1}},
      {"Secant", {lc[1], Q * (Q + 1) / 2}},
      {"ExternalLine", {lc[2], Q * (Q - 1) / 2}},
  }};
  for (const auto& [name, v] : count_rows) {
    LabelTally row{name, v.first, v.second, 0, v.first == v.second};
    if (!row.consistent) rep.violations.push_back(std::string(name) + " count differs from the closed form");
    rep.rows.push_back(row);
  }
  std::uint64_t bad_tangents = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int expected = pclass[i] == ConicPointClass::On ? 1 : pclass[i] == ConicPointClass::External ? 2 : 0;
    if (tangents_through[i] != expected) ++bad_tangents;
  }
  rep.counters["points_with_wrong_tangent_count"] = bad_tangents;
  if (bad_tangents > 0) rep.violations.push_back("some point lies on the wrong number of tangents");

  if (orbit_checks_enabled(options, q)) {
    // Stabilizer of the conic point w = (1,0,0), as matrices A with
    // AᵀGA proportional to G and Aw proportional to w.
    const std::array<Elem, 3> w = {one, Elem{}, Elem{}};
    const int wi = plane->index_of(w);
    Mat3 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = conic.entry(i, j);
    std::vector<Mat3> gw;
    for_each_group_element(f, [&](const Mat3& a) {
      const auto aw = mat_apply(f, a, w);
      if (!aw[1].is_zero() || !aw[2].is_zero()) return true;
      const Mat3 t = mat_mul(f, mat_mul(f, mat_transpose(a), g), a);
      // proportional to g: g has a nonzero (0,2) entry
      const Elem s = f.div(t(0, 2), g(0, 2));
      for (int k = 0; k < 9; ++k)
        if (t.m[k] != f.mul(s, g.m[k])) return true;
      gw.push_back(a);
      return true;
    });
    rep.counters["stabilizer_of_w"] = gw.size();
    // Orbits of Gw on points.
    std::vector<int> parent(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Mat3& a : gw)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const int j = plane->index_of(mat_apply(f, a, pts[i].coords()));
        const int ra = find(static_cast<int>(i)), rb = find(j);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    // Expected sets.
    const Subspace tw = tangent_line(f, conic, pts[wi]);
    auto set_of = [&](std::size_t i) {
      if (static_cast<int>(i) == wi) return 0;
      if (pclass[i] == ConicPointClass::On) return 1;
      if (tw.contains(f, pts[i].coords())) return 2;
      if (pclass[i] == ConicPointClass::External) return 3;
      return 4;
    };
    const std::array<const char*, 5> names = {"Gw:{w}", "Gw:C-w", "Gw:tw-w", "Gw:E-tw", "Gw:I"};
    const std::array<std::uint64_t, 5> sizes = {1, Q, Q, Q * (Q - 1) / 2, Q * (Q - 1) / 2};
    std::array<std::set<int>, 5> roots;
    std::array<std::uint64_t, 5> found{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      roots[set_of(i)].insert(find(static_cast<int>(i)));
      ++found[set_of(i)];
    }
    std::set<int> all_roots;
    for (std::size_t i = 0; i < pts.size(); ++i) all_roots.insert(find(static_cast<int>(i)));
    rep.counters["gw_orbits"] = all_roots.size();
    for (int k = 0; k < 5; ++k) {
      // one orbit per set, of the expected size
      LabelTally row{names[k], found[k], sizes[k], gw.size() / std::max<std::uint64_t>(1, found[k]),
                     roots[k].size() == 1 && found[k] == sizes[k]};
      if (!row.consistent) rep.violations.push_back(std::string(names[k]) + " is not a single Gw-orbit of the expected size");
      rep.rows.push_back(row);
    }
    if (all_roots.size() != 5) rep.violations.push_back("Gw has " + std::to_string(all_roots.size()) + " point orbits, expected 5");
  }
  rep.seconds = since(t0);
  return rep;
}

// ---------------------------------------------------------------- solids

AuditReport audit_solids(const FieldPtr& field, const AuditOptions&) {
  const auto t0 = Clock::now();
  const Field& f = *field;
  const int q = f.q();
  AuditReport rep;
  rep.kind = "solids";
  rep.q = q;
  const SubspaceEnumerator en(field, 5, 3);
  const OrbitPartition part = orbit_partition(field, 3);
  const auto weights = trace_form_weights(f);
  std::vector<int> label_of_orbit(part.sizes.size(), -1);
  std::array<std::uint64_t, kLineLabelCount> tally{};
  std::uint64_t split = 0;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    const Subspace line = orthogonal_complement(f, en.at(i), weights);
    const int label = static_cast<int>(classify_line(field, line).label);
    ++tally[label];
    int& slot = label_of_orbit[part.orbit[i]];
    if (slot == -1) slot = label;
    if (slot != label) ++split;
  }
  rep.scanned = en.count();
  rep.counters["partition_orbits"] = part.sizes.size();
  rep.counters["orbits_with_mixed_labels"] = split;
  std::set<int> distinct(label_of_orbit.begin(), label_of_orbit.end());
  rep.counters["solid_classes"] = distinct.size();
  if (split > 0) rep.violations.push_back("dual line label is not constant on solid orbits");
  if (part.sizes.size() != 15 || distinct.size() != 15)
    rep.violations.push_back("expected 15 solid orbits with 15 distinct dual labels");
  const std::uint64_t group = pgl3_order(q);
  for (LineLabel l : all_line_labels()) {
    LabelTally row;
    row.label = to_string(l);
    row.tally = tally[static_cast<int>(l)];
    row.stabilizer_order = stabilizer_order(field, line_representative(field, l).subspace);
    row.expected_orbit_size = group / row.stabilizer_order;
    row.consistent = row.tally == row.expected_orbit_size;
    if (!row.consistent) rep.violations.push_back(row.label + ": solid tally differs from the line orbit size");
    rep.rows.push_back(row);
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace conicnet
