#pragma once

// Orbit labels for lines and for planes meeting the Veronesean, the
// classifiers that assign them, and the canonical representatives.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conicnet/cubics.hpp"
#include "conicnet/veronese.hpp"

namespace conicnet {

enum class PlaneLabel {
  Sigma1, Sigma2, Sigma3, Sigma4, Sigma5, Sigma6, Sigma7, Sigma8,
  Sigma9, Sigma10, Sigma11, Sigma12, Sigma13, Sigma14, Sigma14prime, Sigma15,
};

enum class LineLabel {
  o5, o6, o8_1, o8_2, o9, o10, o12, o13_1, o13_2, o14_1, o14_2, o15_1, o15_2, o16, o17,
};

inline constexpr int kPlaneLabelCount = 16;
inline constexpr int kLineLabelCount = 15;

/// ASCII names: "Sigma1", "Sigma14prime", "o8_1", ...
std::string to_string(PlaneLabel label);
std::string to_string(LineLabel label);
std::optional<PlaneLabel> parse_plane_label(const std::string& name);
std::optional<LineLabel> parse_line_label(const std::string& name);

const std::vector<PlaneLabel>& all_plane_labels();
const std::vector<LineLabel>& all_line_labels();
/// The 15 plane labels realized over F_q: Sigma14 for p != 3, Sigma14prime for p = 3.
std::vector<PlaneLabel> plane_labels_for(int q);
bool plane_label_available(PlaneLabel label, int q);

/// Closed-form point-orbit distributions.
OrbitDistribution expected_plane_distribution(PlaneLabel label, int q);
OrbitDistribution expected_line_distribution(LineLabel label, int q);

struct LineReport {
  LineLabel label{};
  OrbitDistribution distribution;
  BinaryForm cubic;
  BinaryFactorType factor = BinaryFactorType::Zero;
  std::vector<std::string> trace;
};

/// Distribution lookup, with the binary det cubic splitting the shared
/// distribution [0,1,0,q] of o15_1 and o16.  InternalInconsistency when no
/// row matches.
LineReport classify_line(const FieldPtr& field, const Subspace& line);

struct PlaneReport {
  std::optional<PlaneLabel> label;  // absent: the plane misses the Veronesean
  OrbitDistribution distribution;
  std::optional<TernaryCubic> cubic;
  std::vector<std::string> trace;
};

struct ClassifyOptions {
  bool trace = true;
};

PlaneReport classify_plane(const FieldPtr& field, const Subspace& plane, ClassifyOptions options = {});

/// classify_plane on the half-Gram plane; NotRankOne if it misses the
/// Veronesean.
PlaneReport classify_net(const FieldPtr& field, const Net& net);

struct Representative {
  Subspace subspace;
  std::vector<Sym3> basis;                 // the matrices multiplying alpha, beta, gamma
  std::map<std::string, Elem> parameters;  // eps, c, u, v, w as used
};

/// Condition on c for the Sigma14 family: c not 0 or 1, -3c a square, and
/// (sqrt c + 1)/(sqrt c - 1) not a cube in F_q(sqrt -3).
bool sigma14_admissible(const FieldPtr& field, Elem c);
/// Least admissible c in element order; nullopt when none exists (p = 3).
std::optional<Elem> least_admissible_c(const FieldPtr& field);
/// The plane <E00, E01+E12, cE11-E12+E22> for any c.
Subspace sigma14_plane(const FieldPtr& field, Elem c);

/// LabelUnavailableForCharacteristic for Sigma14 at p = 3 and Sigma14prime
/// at p != 3.
Representative plane_representative(const FieldPtr& field, PlaneLabel label);
Representative line_representative(const FieldPtr& field, LineLabel label);

}  // namespace conicnet
