#include "mrpcorr/relation.hpp"

#include <algorithm>
#include <sstream>

namespace mrpcorr {

FiniteDomain::FiniteDomain(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  if (data->labels.size() > 64) throw std::invalid_argument("domain too large (max 64)");
  for (std::size_t i = 0; i < data->labels.size(); ++i) {
    auto [it, fresh] = data->index.emplace(data->labels[i], i);
    if (!fresh) throw std::invalid_argument("duplicate domain label: " + data->labels[i]);
  }
  data_ = std::move(data);
}

FiniteDomain FiniteDomain::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return FiniteDomain(std::move(labels));
}

std::optional<std::size_t> FiniteDomain::index(std::string_view label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

FiniteRelation::FiniteRelation(FiniteDomain src, FiniteDomain dst)
    : src_(std::move(src)), dst_(std::move(dst)), rows_(src_.size(), 0) {}

FiniteRelation FiniteRelation::identity(const FiniteDomain& d) {
  FiniteRelation r(d, d);
  for (std::size_t i = 0; i < d.size(); ++i) r.rows_[i] = bit(i);
  return r;
}

FiniteRelation FiniteRelation::total(const FiniteDomain& src, const FiniteDomain& dst) {
  FiniteRelation r(src, dst);
  for (auto& row : r.rows_) row = dst.full();
  return r;
}

FiniteRelation FiniteRelation::from_rows(FiniteDomain src, FiniteDomain dst, std::vector<Bits> rows) {
  if (rows.size() != src.size()) throw std::invalid_argument("row count does not match source domain");
  FiniteRelation r(std::move(src), std::move(dst));
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u] & ~r.dst_.full()) throw std::invalid_argument("row exceeds target domain");
    r.rows_[u] = rows[u];
  }
  return r;
}

void FiniteRelation::set(std::size_t u, std::size_t v, bool value) {
  if (u >= src_size() || v >= dst_size()) throw std::out_of_range("relation index out of range");
  if (value)
    rows_[u] |= bit(v);
  else
    rows_[u] &= ~bit(v);
}

FiniteRelation FiniteRelation::converse() const {
  FiniteRelation r(dst_, src_);
  for (std::size_t u = 0; u < src_size(); ++u)
    for (std::size_t v = 0; v < dst_size(); ++v)
      if (at(u, v)) r.rows_[v] |= bit(u);
  return r;
}

FiniteRelation FiniteRelation::complement() const {
  FiniteRelation r(src_, dst_);
  for (std::size_t u = 0; u < src_size(); ++u) r.rows_[u] = ~rows_[u] & dst_.full();
  return r;
}

FiniteRelation FiniteRelation::unite(const FiniteRelation& o) const {
  FiniteRelation r = *this;
  for (std::size_t u = 0; u < src_size(); ++u) r.rows_[u] |= o.rows_[u];
  return r;
}

FiniteRelation FiniteRelation::intersect(const FiniteRelation& o) const {
  FiniteRelation r = *this;
  for (std::size_t u = 0; u < src_size(); ++u) r.rows_[u] &= o.rows_[u];
  return r;
}

bool FiniteRelation::subset_of(const FiniteRelation& o) const {
  for (std::size_t u = 0; u < src_size(); ++u)
    if (rows_[u] & ~o.rows_[u]) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> FiniteRelation::witness_not_subset(
    const FiniteRelation& o) const {
  for (std::size_t u = 0; u < src_size(); ++u) {
    Bits extra = rows_[u] & ~o.rows_[u];
    if (extra) return std::make_pair(u, std::size_t(__builtin_ctzll(extra)));
  }
  return std::nullopt;
}

Bits FiniteRelation::image(Bits us) const {
  Bits out = 0;
  for (std::size_t u = 0; u < src_size(); ++u)
    if (contains(us, u)) out |= rows_[u];
  return out;
}

Bits FiniteRelation::preimage(Bits vs) const {
  Bits out = 0;
  for (std::size_t u = 0; u < src_size(); ++u)
    if (rows_[u] & vs) out |= bit(u);
  return out;
}

Bits FiniteRelation::galois_pos(int side, Bits s) const {
  if (side == 0) {
    if (s & ~dst_.full()) throw std::invalid_argument("argument not a subset of the target domain");
    Bits out = 0;
    for (std::size_t u = 0; u < src_size(); ++u)
      if ((rows_[u] & s) == s) out |= bit(u);
    return out;
  }
  if (s & ~src_.full()) throw std::invalid_argument("argument not a subset of the source domain");
  Bits out = dst_.full();
  for (std::size_t u = 0; u < src_size(); ++u)
    if (contains(s, u)) out &= rows_[u];
  return out;
}

Bits FiniteRelation::galois_neg(int side, Bits s) const {
  if (side == 0) {
    if (s & ~dst_.full()) throw std::invalid_argument("argument not a subset of the target domain");
    Bits out = 0;
    for (std::size_t u = 0; u < src_size(); ++u)
      if ((rows_[u] & s) == 0) out |= bit(u);
    return out;
  }
  if (s & ~src_.full()) throw std::invalid_argument("argument not a subset of the source domain");
  Bits out = dst_.full();
  for (std::size_t u = 0; u < src_size(); ++u)
    if (contains(s, u)) out &= ~rows_[u];
  return out & dst_.full();
}

Bits FiniteRelation::box(Bits w) const { return ~preimage(~w & dst_.full()) & src_.full(); }

Bits FiniteRelation::dia(Bits w) const { return preimage(w); }

bool FiniteRelation::is_reflexive() const {
  if (src_size() != dst_size()) return false;
  for (std::size_t u = 0; u < src_size(); ++u)
    if (!at(u, u)) return false;
  return true;
}

bool FiniteRelation::empty() const {
  for (Bits row : rows_)
    if (row) return false;
  return true;
}

std::size_t FiniteRelation::pair_count() const {
  std::size_t n = 0;
  for (Bits row : rows_) n += std::size_t(popcount(row));
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < src_size(); ++u)
    for (std::size_t v = 0; v < dst_size(); ++v)
      if (at(u, v)) out.emplace_back(u, v);
  return out;
}

std::uint64_t FiniteRelation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(src_size());
  mix(dst_size());
  for (Bits row : rows_) mix(row);
  return h;
}

namespace {

void require_endo(const FiniteRelation& r, const FiniteRelation& t, const FiniteRelation* e) {
  if (r.src_size() != r.dst_size() || t.src_size() != t.dst_size() || r.src_size() != t.src_size())
    throw std::invalid_argument("composition requires endorelations on one domain");
  if (e && (e->src_size() != r.src_size() || e->dst_size() != r.src_size()))
    throw std::invalid_argument("mediating relation domain mismatch");
}

}  // namespace

FiniteRelation compose(CompKind kind, const FiniteRelation& r, const FiniteRelation& t,
                       const FiniteRelation* e) {
  require_endo(r, t, e);
  const std::size_t n = r.src_size();
  const Bits all = full_mask(n);
  FiniteRelation out(r.src(), t.dst());

  if (kind == CompKind::Circ) {
    std::vector<Bits> rows(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t m = 0; m < n; ++m)
        if (r.at(u, m)) rows[u] |= t.row(m);
    return FiniteRelation::from_rows(r.src(), t.dst(), std::move(rows));
  }

  if ((kind == CompKind::DiaE || kind == CompKind::BoxE) && !e)
    throw std::invalid_argument("mediated composition requires the graph relation");

  // Star/Ast/DiaE/BoxE are all read off from the [0]-operator of the result:
  // membership of (u, w) is u lying outside the computed universal set.
  for (std::size_t w = 0; w < n; ++w) {
    Bits s = t.galois_neg(0, bit(w));
    Bits m;
    switch (kind) {
      case CompKind::Star:
      case CompKind::Ast:
        m = s;
        break;
      case CompKind::DiaE:
        m = e->galois_neg(0, s);
        break;
      case CompKind::BoxE:
        m = e->galois_neg(1, s);
        break;
      default:
        m = s;
        break;
    }
    Bits col = r.galois_neg(0, m);
    Bits members = ~col & all;
    for (std::size_t u = 0; u < n; ++u)
      if (contains(members, u)) out.set(u, w);
  }
  return out;
}

std::optional<CompatViolation> e_compat_violation(const FiniteRelation& r, const FiniteRelation& e,
                                                  Orientation o) {
  if (!e.is_reflexive()) throw std::invalid_argument("compatibility check requires reflexive E");
  if (r.src_size() != e.src_size() || r.dst_size() != e.src_size())
    throw std::invalid_argument("compatibility check requires an endorelation on E's domain");
  const std::size_t n = e.src_size();
  auto close_a = [&](Bits s) { return e.galois_neg(0, e.galois_neg(1, s)); };
  auto close_x = [&](Bits s) { return e.galois_neg(1, e.galois_neg(0, s)); };
  for (std::size_t z = 0; z < n; ++z) {
    Bits s0 = r.galois_neg(0, bit(z));
    Bits c0 = o == Orientation::BoxLike ? close_a(s0) : close_x(s0);
    if (c0 & ~s0) return CompatViolation{o, 0, z, s0, c0};
  }
  for (std::size_t z = 0; z < n; ++z) {
    Bits s1 = r.galois_neg(1, bit(z));
    Bits c1 = o == Orientation::BoxLike ? close_x(s1) : close_a(s1);
    if (c1 & ~s1) return CompatViolation{o, 1, z, s1, c1};
  }
  return std::nullopt;
}

bool is_e_compatible(const FiniteRelation& r, const FiniteRelation& e, Orientation o) {
  return !e_compat_violation(r, e, o).has_value();
}

std::string format_subset(const FiniteDomain& d, Bits s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (contains(s, i)) {
      if (!first) os << ",";
      os << d.label(i);
      first = false;
    }
  os << "}";
  return os.str();
}

std::string format_pair(const FiniteDomain& src, const FiniteDomain& dst,
                        std::pair<std::size_t, std::size_t> p) {
  return "(" + src.label(p.first) + "," + dst.label(p.second) + ")";
}

}  // namespace mrpcorr
