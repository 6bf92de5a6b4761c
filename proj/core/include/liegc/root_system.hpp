#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegc/matrix.hpp"
#include "liegc/scalar.hpp"

namespace liegc {

struct UnknownType : std::runtime_error {
  explicit UnknownType(const std::string& t) : std::runtime_error("unknown Cartan type: " + t) {}
};
struct NotInSubsystem : std::runtime_error {
  NotInSubsystem() : std::runtime_error("root does not lie in the subsystem span") {}
};
struct SearchBudgetExceeded : std::runtime_error {
  SearchBudgetExceeded() : std::runtime_error("subset search budget exceeded") {}
};
struct NotSymmetricClosed : std::runtime_error {
  NotSymmetricClosed() : std::runtime_error("subset is not closed and symmetric") {}
};
struct ThetaNotAutomorphism : std::runtime_error {
  ThetaNotAutomorphism() : std::runtime_error("theta is not a diagram automorphism") {}
};

/// Direct sum of simple types, e.g. "A2", "B3", "A1+A1".
struct CartanType {
  std::vector<std::pair<char, int>> factors;  // family letter, rank

  static CartanType parse(const std::string& text);  // UnknownType
  std::string str() const;
  int rank() const;
  bool operator==(const CartanType& o) const { return factors == o.factors; }
};

using RootVec = std::vector<int>;  // coordinates over the simple roots

/// Roots in simple-root integer coordinates.  Positive roots come first,
/// ordered by (height, lexicographic); the negative of root k sits at
/// index k + |R+|.  The pairing is normalized by the Killing form, i.e.
/// <a,b> = B(H_a, H_b) where H_a is the Killing dual of a.
class RootSystem {
public:
  static RootSystem build(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const std::vector<RootVec>& roots() const { return roots_; }
  const RootVec& root(int idx) const { return roots_[idx]; }

  int index_of(const RootVec& v) const;  // -1 when absent
  int negative_of(int idx) const;
  bool is_positive(int idx) const { return idx < static_cast<int>(num_positive()); }
  std::optional<int> sum_index(int i, int j) const;  // index of root i + root j
  int height(int idx) const;                         // wrt the ambient simple roots

  // Cartan matrix: cartan(i,j) = <alpha_j, alpha_i^vee> = 2(a_i,a_j)/(a_i,a_i).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  int cartan_pairing(int root_idx, int simple) const;  // <root, alpha_simple^vee>

  const std::vector<std::vector<Rational>>& pairing() const { return pairing_; }
  Rational pair(int a, int b) const;  // <a,b> Killing-normalized

  int component_of(int idx) const { return component_[idx]; }
  // Relative length^2 of root idx in internal (Cartan-combinatorial) units.
  Rational length_sq(int idx) const;

private:
  CartanType type_;
  int rank_ = 0;
  std::vector<RootVec> roots_;
  std::map<RootVec, int> index_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> pairing_;       // Killing <a,b> on all roots
  std::vector<Rational> simple_norm_;                // (a_i,a_i) combinatorial units
  std::vector<int> component_;
};

/// sigma acting on roots as -theta, where theta is an involutive
/// automorphism of the simple nodes.
struct SigmaAction {
  std::vector<int> theta;      // involution of simple node indices
  std::vector<int> root_perm;  // sigma on root indices

  static SigmaAction from_theta(const RootSystem& rs, std::vector<int> theta);
  static SigmaAction inner(const RootSystem& rs);  // theta = identity
  int operator()(int idx) const { return root_perm[idx]; }
  bool is_inner(const RootSystem& rs) const;
};

struct RootSubset {
  const RootSystem* parent = nullptr;
  std::vector<int> members;  // sorted root indices

  bool contains(int idx) const;
};

struct SubsetClassification {
  bool closed = false;
  std::vector<std::array<int, 3>> closure_violations;  // (a, b, missing sum)
  bool sigma_parabolic = false;
  bool sigma_positive = false;
  std::vector<int> symmetric_part;  // R0 ∩ (-R0)
};

SubsetClassification classify_subset(const RootSubset& r0, const SigmaAction& sigma);

struct EnumerateOptions {
  bool sigma_positive_only = false;
  std::uint64_t budget = std::uint64_t{1} << 22;  // max masks examined
};

/// All closed sigma-parabolic subsets, in lexicographic bitmask order.
std::vector<RootSubset> enumerate_sigma_parabolic(const RootSystem& rs, const SigmaAction& sigma,
                                                  std::size_t max_results,
                                                  const EnumerateOptions& opts = {});

struct EnumerateOutcome {
  std::vector<RootSubset> subsets;
  bool complete = true;  // false when the mask budget ran out mid-scan
};

/// Budget-clamped variant: scans at most opts.budget masks and reports
/// whether the scan covered the whole space.
EnumerateOutcome enumerate_sigma_parabolic_partial(const RootSystem& rs, const SigmaAction& sigma,
                                                   std::size_t max_results,
                                                   const EnumerateOptions& opts = {});

/// Simple system of a closed symmetric subset: the indecomposable elements
/// of its positive part (positive = lexicographically positive, which for
/// the stored coordinates is exactly the ambient-positive part).
std::vector<int> simple_system_of(const RootSystem& rs, const std::vector<int>& symmetric_closed);

/// Height of a root with respect to a chosen simple system Pi: the
/// coordinate sum of its integer expansion over Pi.
int height_in(const RootSystem& rs, int root_idx, const std::vector<int>& simples);

}  // namespace liegc
