#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrpcorr {

/// Subset of a finite domain, one bit per element (element i <-> bit i).
using Bits = std::uint64_t;

inline Bits bit(std::size_t i) { return Bits{1} << i; }
inline Bits full_mask(std::size_t n) { return n == 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
inline bool contains(Bits s, std::size_t i) { return (s >> i) & 1; }
inline int popcount(Bits s) { return __builtin_popcountll(s); }

/// Ordered, labelled index set. Cheap to copy; labels are shared.
class FiniteDomain {
 public:
  FiniteDomain() : FiniteDomain(std::vector<std::string>{}) {}
  explicit FiniteDomain(std::vector<std::string> labels);

  /// n elements labelled prefix0, prefix1, ...
  static FiniteDomain indexed(std::size_t n, std::string_view prefix = "z");

  std::size_t size() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<std::size_t> index(std::string_view label) const;
  Bits full() const { return full_mask(size()); }

  bool operator==(const FiniteDomain& o) const { return data_ == o.data_ || data_->labels == o.data_->labels; }
  bool operator!=(const FiniteDomain& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Boolean membership matrix between two finite domains.
/// rows_[u] holds the row of u as a bit mask over the target domain.
class FiniteRelation {
 public:
  FiniteRelation() = default;
  FiniteRelation(FiniteDomain src, FiniteDomain dst);

  static FiniteRelation identity(const FiniteDomain& d);
  static FiniteRelation total(const FiniteDomain& src, const FiniteDomain& dst);
  static FiniteRelation from_rows(FiniteDomain src, FiniteDomain dst, std::vector<Bits> rows);

  const FiniteDomain& src() const { return src_; }
  const FiniteDomain& dst() const { return dst_; }
  std::size_t src_size() const { return rows_.size(); }
  std::size_t dst_size() const { return dst_.size(); }

  bool at(std::size_t u, std::size_t v) const { return contains(rows_[u], v); }
  void set(std::size_t u, std::size_t v, bool value = true);
  Bits row(std::size_t u) const { return rows_[u]; }
  const std::vector<Bits>& rows() const { return rows_; }

  FiniteRelation converse() const;
  FiniteRelation complement() const;
  FiniteRelation unite(const FiniteRelation& o) const;
  FiniteRelation intersect(const FiniteRelation& o) const;

  bool subset_of(const FiniteRelation& o) const;
  /// First pair (row-major) present here but absent in o.
  std::optional<std::pair<std::size_t, std::size_t>> witness_not_subset(const FiniteRelation& o) const;

  /// R[U'] and R^{-1}[V'] (existential images).
  Bits image(Bits us) const;
  Bits preimage(Bits vs) const;

  /// T^(1)[U'] / T^(0)[V']: elements related to everything in the argument.
  Bits galois_pos(int side, Bits s) const;
  /// T^[1][U'] / T^[0][V']: same for the complement relation.
  Bits galois_neg(int side, Bits s) const;

  /// [T]W = (T^{-1}[W^c])^c and <T>W = T^{-1}[W].
  Bits box(Bits w) const;
  Bits dia(Bits w) const;

  bool is_reflexive() const;
  bool empty() const;
  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const FiniteRelation& o) const { return rows_ == o.rows_ && src_size() == o.src_size() && dst_size() == o.dst_size(); }
  bool operator!=(const FiniteRelation& o) const { return !(*this == o); }

  std::uint64_t hash() const;

 private:
  FiniteDomain src_, dst_;
  std::vector<Bits> rows_;
};

/// The five binary compositions on endorelations. Circ is ordinary relational
/// composition; Star and Ast share one assignment (Star is the Kripke-side
/// name, Ast the graph-side one); DiaE and BoxE are the E-mediated forms and
/// require the mediating relation e.
enum class CompKind { Circ, Star, DiaE, BoxE, Ast };

FiniteRelation compose(CompKind kind, const FiniteRelation& r, const FiniteRelation& t,
                       const FiniteRelation* e = nullptr);

/// Orientation of the compatibility conditions: BoxLike is the pair satisfied
/// by the relation interpreting box, DiaLike the pair for diamond.
enum class Orientation { BoxLike, DiaLike };

struct CompatViolation {
  Orientation orientation;
  int condition;        // 0: closure of R^[0][z] leaks, 1: closure of R^[1][z] leaks
  std::size_t element;  // the singleton z at which it fails
  Bits stable_set;      // R^[0][z] or R^[1][z]
  Bits closure;         // its double-polar closure
};

/// Checks the two singleton stability conditions of the requested orientation.
std::optional<CompatViolation> e_compat_violation(const FiniteRelation& r, const FiniteRelation& e,
                                                  Orientation o);
bool is_e_compatible(const FiniteRelation& r, const FiniteRelation& e, Orientation o);

std::string format_subset(const FiniteDomain& d, Bits s);
std::string format_pair(const FiniteDomain& src, const FiniteDomain& dst,
                        std::pair<std::size_t, std::size_t> p);

}  // namespace mrpcorr
