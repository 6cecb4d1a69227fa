#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelie/lie.hpp"
#include "planelie/report.hpp"
#include "planelie/sl2.hpp"

namespace planelie {

/// A realization of sl(2) by planar vector fields.
struct Realization {
  std::string id;  // "aI", "bII-eps0", "bII-eps1"
  VectorField X;
  VectorField Y;
  std::optional<int> eps;
};

/// A solvable radical r paired with the realization it extends.
///
/// A generator list {gen, W} means the sl(2)-module generated by gen,
/// extended by the single field W.
struct RadicalSpec {
  std::string id;
  std::string realization_id;
  std::vector<VectorField> generators;
  std::size_t expected_dim = 0;
  int expected_abelian_ideal_codim = 0;
  std::vector<VectorField> foliation_generators;
};

class Catalog {
 public:
  std::vector<Realization> realizations;
  std::vector<RadicalSpec> radicals;
  ChartMap step5_map;

  const Realization& realization(const std::string& id) const;
};

// Generators used throughout the replay.
Realization realization_aI();
Realization realization_bII(int eps);
/// dx + y dy, the weight-zero field normalizing every type (b) radical.
VectorField weight_zero_field();
/// e^{dx} dy.
VectorField rank_one_candidate(const Rational& d);
/// e^{dx} (dx + (y + ell) dy).
VectorField rank_two_candidate(const Rational& d, const Rational& ell);
/// x~ = 2 e^x / y, y~ = 2 e^x / y^2 onto the chart "tilde".
ChartMap step5_map();

/// The fixed realizations, the six radicals, and the tilde chart map.
/// `family_weight` instantiates the two radicals generated by
/// e^{dx}(dx + y dy).
Catalog catalog(const Rational& family_weight = 1);

std::vector<Rational> default_grid();

/// Outcome of checking that s + r is a Lie algebra with r a solvable ideal.
struct ExtensionCheck {
  bool closed = false;
  std::size_t total_dim = 0;
  std::size_t radical_dim = 0;
  bool radical_is_ideal = false;
  bool radical_solvable = false;
  bool direct = false;  // s and r intersect trivially
  bool radical_abelian = false;
  /// Abelian ideal of r of codimension <= 1, when one was found.
  std::optional<SpanBasis> abelian_ideal;
  SpanBasis radical;
  SpanBasis total;

  /// All structural conditions hold at the expected dimension.
  bool valid(std::size_t expected_radical_dim) const;
};

ExtensionCheck check_extension(const Realization& s, const RadicalSpec& r);

std::vector<ClaimReport> verify_step(int n,
                                     const std::vector<Rational>& grid = default_grid());
/// part is one of 'a', 'b', 'c', 'd'.
std::vector<ClaimReport> verify_theorem1(char part,
                                         const std::vector<Rational>& grid = default_grid());

struct RunSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t known_discrepancy = 0;
  std::vector<std::string> kd_families;  // sorted, distinct
};

RunSummary summarize(const std::vector<ClaimReport>& reports);

struct RunResult {
  std::vector<ClaimReport> reports;
  RunSummary summary;
};

/// Parts a-d, then steps 1-5. Succeeds iff summary.fail == 0.
RunResult run_all(const std::vector<Rational>& grid = default_grid());

/// Family tag ("KD-1" ... "KD-5") of a known-discrepancy claim id, if the
/// id is registered.
std::optional<std::string> kd_family(const std::string& claim_id);

}  // namespace planelie
