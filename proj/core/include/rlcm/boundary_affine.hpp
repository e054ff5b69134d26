#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rlcm/semigroup.hpp"

namespace rlcm {

/// Injective partial map of Z: on the class rho + mu Z it sends
/// rho + mu t to c + d t (d != 0). Equivalently n -> (d n + c mu - d rho) / mu,
/// so adjoints of integer maps such as m -> m / 2 are representable.
class AffinePI {
 public:
  /// The empty map.
  AffinePI() = default;

  /// n -> alpha n + beta on residue class rho (mod mu).
  static AffinePI affine(std::int64_t alpha, std::int64_t beta, std::int64_t rho = 0, std::int64_t mu = 1);
  static AffinePI identity() { return affine(1, 0); }
  /// Identity on rho (mod mu).
  static AffinePI projection(std::int64_t rho, std::int64_t mu) { return affine(1, 0, rho, mu); }
  static AffinePI parametrized(std::int64_t rho, std::int64_t mu, std::int64_t c, std::int64_t d);
  static AffinePI empty() { return {}; }

  bool is_empty() const { return empty_; }
  std::int64_t rho() const { return rho_; }
  std::int64_t mu() const { return mu_; }
  bool in_domain(std::int64_t n) const;
  std::optional<std::int64_t> apply(std::int64_t n) const;
  bool is_projection() const { return !empty_ && c_ == rho_ && d_ == mu_; }

  /// "a*n+b on r(mod m)", with "(a*n+b)/k" for non-integral maps; "empty".
  std::string text() const;

  friend bool operator==(const AffinePI&, const AffinePI&) = default;

 private:
  bool empty_ = true;
  std::int64_t rho_ = 0;
  std::int64_t mu_ = 1;
  std::int64_t c_ = 0;
  std::int64_t d_ = 1;
};

/// f o g on {n in dom g : g(n) in dom f}.
AffinePI affine_compose(const AffinePI& f, const AffinePI& g);

/// Left-to-right product f_1 f_2 ... f_k = f_1 o ... o f_k.
AffinePI affine_product(std::initializer_list<AffinePI> fs);

/// Inverse on the range.
AffinePI affine_adjoint(const AffinePI& f);

/// f^k for k >= 0; negative k means (f^*)^{-k}.
AffinePI affine_power(const AffinePI& f, std::int64_t k);

enum class PartitionKind { Partition, CoverOnly, DisjointOnly, Neither };

struct PartitionVerdict {
  PartitionKind kind = PartitionKind::Partition;
  std::optional<std::int64_t> uncovered;
  std::optional<std::int64_t> overlap;
};

/// Exact decision over residues modulo the lcm of the moduli. Members must be
/// projections.
PartitionVerdict partition_check(const std::vector<AffinePI>& projections);

std::string partition_text(PartitionKind k);

class UnknownModel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named family of generator maps. Generators take up to two integer
/// parameters: v(p), t(i), t(r, x), s(m), s(m, j) and so on.
struct BoundaryModel {
  std::string name;
  int d = 0;  // letters of BS(1, d); zero elsewhere
  std::map<std::string, std::function<AffinePI(std::int64_t, std::int64_t)>, std::less<>> generators;

  AffinePI gen(std::string_view g, std::int64_t i = 0, std::int64_t j = 0) const;
};

/// QN, QZ, Q2, BS1n(d) (also "BS1n:d"), NxN or ZxZ; throws UnknownModel.
BoundaryModel build_model(std::string_view name);

std::vector<std::string> model_names();

/// One report per relation, each an exact affine identity or partition
/// verdict. `suite` is "boundary" (the model's own relations) or, for NxN and
/// ZxZ, also "K".
std::vector<CheckReport> verify_boundary_suite(const BoundaryModel& model, std::string_view suite = "boundary");

/// The generator assignments between the boundary quotients: s^r v_x against
/// t_(r,x) for x <= max_x in NxN and ZxZ, v_a against s_(0,sgn a) t_(0,|a|)
/// for |a| <= max_a, and the Q2 generators against BS1n(2).
std::vector<CheckReport> verify_generator_maps(std::int64_t max_x = 12, std::int64_t max_a = 6);

}  // namespace rlcm
