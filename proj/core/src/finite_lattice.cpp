#include "ulat/finite_lattice.hpp"

#include <algorithm>
#include <numeric>

namespace ulat {

namespace {

using Matrix = std::vector<std::vector<bool>>;

void close_order(Matrix& order) {
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) order[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (order[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (order[k][j]) order[i][j] = true;
}

// Index of the least element of `candidates` under `order`, if any.
std::optional<std::size_t> least(const Matrix& order, const std::vector<std::size_t>& candidates) {
  for (auto c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t d) { return order[c][d]; })) return c;
  return std::nullopt;
}

std::optional<std::size_t> greatest(const Matrix& order, const std::vector<std::size_t>& candidates) {
  for (auto c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t d) { return order[d][c]; })) return c;
  return std::nullopt;
}

}  // namespace

FiniteLattice::FiniteLattice(std::string name, std::vector<std::string> names, std::vector<std::uint32_t> meet,
                             std::vector<std::uint32_t> join)
    : name_(std::move(name)), names_(std::move(names)), meet_(std::move(meet)), join_(std::move(join)) {
  if (names_.empty()) throw NotALatticeError("a lattice needs at least one element", {}, {});
  const auto all = elements();
  auto below_all = [&](Element b) {
    return std::all_of(all.begin(), all.end(), [&](Element x) { return this->meet(b, x) == b; });
  };
  auto above_all = [&](Element t) {
    return std::all_of(all.begin(), all.end(), [&](Element x) { return this->join(t, x) == t; });
  };
  for (auto x : all) {
    if (!bottom_ && below_all(x)) bottom_ = x;
    if (!top_ && above_all(x)) top_ = x;
  }
  distributive_ = check_distributive(*this).distributive;
}

FiniteLattice FiniteLattice::from_order(std::string name, std::vector<std::string> names, Matrix order) {
  const std::size_t n = names.size();
  if (order.size() != n || std::any_of(order.begin(), order.end(), [n](const auto& row) { return row.size() != n; }))
    throw std::invalid_argument("order matrix does not match element count");
  close_order(order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (order[i][j] && order[j][i])
        throw NotALatticeError("order is not antisymmetric: '" + names[i] + "' and '" + names[j] + "' form a cycle",
                               names[i], names[j]);

  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t k = 0; k < n; ++k) {
        if (order[i][k] && order[j][k]) upper.push_back(k);
        if (order[k][i] && order[k][j]) lower.push_back(k);
      }
      const auto sup = least(order, upper);
      if (!sup)
        throw NotALatticeError("pair ('" + names[i] + "', '" + names[j] + "') lacks a supremum", names[i], names[j]);
      const auto inf = greatest(order, lower);
      if (!inf)
        throw NotALatticeError("pair ('" + names[i] + "', '" + names[j] + "') lacks an infimum", names[i], names[j]);
      join[i * n + j] = static_cast<std::uint32_t>(*sup);
      meet[i * n + j] = static_cast<std::uint32_t>(*inf);
    }
  return FiniteLattice(std::move(name), std::move(names), std::move(meet), std::move(join));
}

FiniteLattice FiniteLattice::from_covers(std::string name, std::vector<std::string> names,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = names.size();
  Matrix order(n, std::vector<bool>(n, false));
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::out_of_range("cover refers to an unknown element");
    order[lo][hi] = true;
  }
  return from_order(std::move(name), std::move(names), std::move(order));
}

FiniteLattice FiniteLattice::from_tables(std::string name, std::vector<std::string> names,
                                         std::vector<std::uint32_t> meet, std::vector<std::uint32_t> join) {
  const std::size_t n = names.size();
  if (meet.size() != n * n || join.size() != n * n) throw std::invalid_argument("table size does not match element count");
  for (auto v : meet)
    if (v >= n) throw std::out_of_range("meet table entry out of range");
  for (auto v : join)
    if (v >= n) throw std::out_of_range("join table entry out of range");
  // Validate before the constructor derives bounds from the tables.
  auto m = [&](std::size_t i, std::size_t j) { return meet[i * n + j]; };
  auto jn = [&](std::size_t i, std::size_t j) { return join[i * n + j]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool ok = m(x, y) == m(y, x) && jn(x, y) == jn(y, x) && m(x, x) == x && jn(x, x) == x &&
                      m(x, jn(x, y)) == x && jn(x, m(x, y)) == x;
      bool assoc = true;
      for (std::size_t z = 0; z < n && assoc; ++z)
        assoc = m(m(x, y), z) == m(x, m(y, z)) && jn(jn(x, y), z) == jn(x, jn(y, z));
      if (!ok || !assoc)
        throw NotALatticeError("tables violate the lattice axioms at ('" + names[x] + "', '" + names[y] + "')",
                               names[x], names[y]);
    }
  return FiniteLattice(std::move(name), std::move(names), std::move(meet), std::move(join));
}

std::vector<FiniteLattice::Element> FiniteLattice::elements() const {
  std::vector<Element> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

FiniteLattice::Element FiniteLattice::element(std::size_t index) const {
  if (index >= names_.size())
    throw std::out_of_range("element #" + std::to_string(index) + " does not belong to carrier '" + name_ + "'");
  return Element{static_cast<std::uint32_t>(index)};
}

std::optional<FiniteLattice::Element> FiniteLattice::find(std::string_view element_name) const {
  const auto it = std::find(names_.begin(), names_.end(), element_name);
  if (it == names_.end()) return std::nullopt;
  return Element{static_cast<std::uint32_t>(it - names_.begin())};
}

FiniteLattice::Element FiniteLattice::at(std::string_view element_name) const {
  if (auto e = find(element_name)) return *e;
  throw std::out_of_range("no element named '" + std::string(element_name) + "' in carrier '" + name_ + "'");
}

std::vector<std::pair<FiniteLattice::Element, FiniteLattice::Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto all = elements();
  auto lt = [&](Element x, Element y) { return x != y && meet(x, y) == x; };
  for (auto x : all)
    for (auto y : all) {
      if (!lt(x, y)) continue;
      const bool covering = std::none_of(all.begin(), all.end(), [&](Element z) { return lt(x, z) && lt(z, y); });
      if (covering) out.emplace_back(x, y);
    }
  return out;
}

FiniteLattice powerset_lattice(unsigned n) {
  if (n > 6) throw std::invalid_argument("powerset_lattice: n must be at most 6");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names(size);
  std::vector<std::uint32_t> meet(size * size), join(size * size);
  for (std::size_t s = 0; s < size; ++s) {
    std::string label = "{";
    for (unsigned bit = 0; bit < n; ++bit)
      if (s & (std::size_t{1} << bit)) label += (label.size() > 1 ? "," : "") + std::to_string(bit + 1);
    names[s] = label + "}";
    for (std::size_t t = 0; t < size; ++t) {
      meet[s * size + t] = static_cast<std::uint32_t>(s & t);
      join[s * size + t] = static_cast<std::uint32_t>(s | t);
    }
  }
  return FiniteLattice::from_tables("powerset" + std::to_string(n), std::move(names), std::move(meet), std::move(join));
}

FiniteLattice divisor_lattice(unsigned n) {
  if (n == 0) throw std::invalid_argument("divisor_lattice: n must be positive");
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  const std::size_t size = divisors.size();
  auto index_of = [&](unsigned v) {
    return static_cast<std::uint32_t>(std::find(divisors.begin(), divisors.end(), v) - divisors.begin());
  };
  std::vector<std::string> names;
  std::vector<std::uint32_t> meet(size * size), join(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    names.push_back(std::to_string(divisors[i]));
    for (std::size_t j = 0; j < size; ++j) {
      const unsigned g = std::gcd(divisors[i], divisors[j]);
      meet[i * size + j] = index_of(g);
      join[i * size + j] = index_of(divisors[i] / g * divisors[j]);
    }
  }
  return FiniteLattice::from_tables("divisor" + std::to_string(n), std::move(names), std::move(meet), std::move(join));
}

FiniteLattice chain_lattice(unsigned n) {
  if (n == 0) throw std::invalid_argument("chain_lattice: n must be positive");
  std::vector<std::string> names;
  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (unsigned i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (unsigned j = 0; j < n; ++j) {
      meet[i * n + j] = std::min(i, j);
      join[i * n + j] = std::max(i, j);
    }
  }
  return FiniteLattice::from_tables("chain" + std::to_string(n), std::move(names), std::move(meet), std::move(join));
}

FiniteLattice pentagon_lattice() {
  // 0 < a < b < 1, 0 < c < 1
  return FiniteLattice::from_covers("n5", {"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FiniteLattice diamond_lattice() {
  return FiniteLattice::from_covers("m3", {"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace ulat
