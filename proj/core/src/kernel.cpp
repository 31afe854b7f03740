#include "ulat/kernel.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <numeric>

namespace ulat {

namespace {

std::string pair_label(const FiniteLattice& L, FiniteElement x, FiniteElement y) {
  return "(" + L.element_name(x) + ", " + L.element_name(y) + ")";
}

}  // namespace

KernelRelation zero_distance_classes(const FiniteLattice& L, const FiniteFamily& D) {
  const auto all = L.elements();
  const std::size_t n = all.size();
  KernelRelation k;
  k.class_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (k.class_of[i] != n) continue;
    const std::size_t id = k.classes.size();
    k.classes.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (D.all_zero(all[i], all[j])) {
        if (k.class_of[j] != n)
          throw std::invalid_argument("zero distance is not transitive at " + pair_label(L, all[i], all[j]));
        k.class_of[j] = id;
        k.classes[id].push_back(all[j]);
      }
  }
  // Classes were grown from their leaders only, so zero distance has to match
  // class membership on every pair.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (D.all_zero(all[i], all[j]) != (k.class_of[i] == k.class_of[j]))
        throw std::invalid_argument("zero distance is not transitive at " + pair_label(L, all[i], all[j]));
  return k;
}

KernelRelation kernel_partition(const FiniteLattice& L, const FiniteFamily& D) {
  KernelRelation k = zero_distance_classes(L, D);
  const auto all = L.elements();
  // Congruence: x ~ x' implies x v y ~ x' v y and x ^ y ~ x' ^ y.
  for (const auto& cls : k.classes)
    for (std::size_t i = 1; i < cls.size(); ++i)
      for (auto y : all) {
        const auto x = cls.front();
        const auto x2 = cls[i];
        if (!k.same_class(L.join(x, y), L.join(x2, y)))
          throw CongruenceError("kernel classes are not join-congruent: " + pair_label(L, x, x2) + " joined with " +
                                    L.element_name(y),
                                L.element_name(x2), L.element_name(y));
        if (!k.same_class(L.meet(x, y), L.meet(x2, y)))
          throw CongruenceError("kernel classes are not meet-congruent: " + pair_label(L, x, x2) + " met with " +
                                    L.element_name(y),
                                L.element_name(x2), L.element_name(y));
      }
  return k;
}

QuotientLattice quotient(const FiniteLattice& L, const KernelRelation& kernel, const FiniteFamily& D) {
  const std::size_t m = kernel.classes.size();
  std::vector<std::string> names;
  for (const auto& cls : kernel.classes) {
    std::string label;
    for (auto x : cls) label += (label.empty() ? "" : "~") + L.element_name(x);
    names.push_back(cls.size() == 1 ? label : "[" + label + "]");
  }
  std::vector<std::uint32_t> meet(m * m), join(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::optional<std::size_t> mc, jc;
      for (auto x : kernel.classes[i])
        for (auto y : kernel.classes[j]) {
          const auto a = kernel.class_of[L.meet(x, y).index];
          const auto b = kernel.class_of[L.join(x, y).index];
          if ((mc && *mc != a) || (jc && *jc != b))
            throw std::invalid_argument("quotient operations depend on representatives at " + pair_label(L, x, y));
          mc = a;
          jc = b;
        }
      meet[i * m + j] = static_cast<std::uint32_t>(*mc);
      join[i * m + j] = static_cast<std::uint32_t>(*jc);
    }
  auto carrier = FiniteLattice::from_tables(L.name() + "/~", std::move(names), std::move(meet), std::move(join));

  std::vector<LatticeSemimetric<FiniteElement>> induced;
  for (const auto& d : D) {
    // Distance table over classes, checked against every representative pair.
    auto table = std::make_shared<std::vector<ExtValue>>(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const ExtValue v = d(kernel.classes[i].front(), kernel.classes[j].front());
        for (auto x : kernel.classes[i])
          for (auto y : kernel.classes[j])
            if (d(x, y) != v)
              throw std::invalid_argument("induced '" + d.name + "' depends on representatives at " +
                                          pair_label(L, x, y));
        (*table)[i * m + j] = v;
      }
    induced.push_back(make_semimetric<FiniteElement>(
        d.name, [table, m](FiniteElement x, FiniteElement y) { return table->at(x.index * m + y.index); }));
  }
  FiniteFamily family(carrier.name(), std::move(induced));
  return QuotientLattice{std::move(carrier), std::move(family), kernel};
}

bool is_sublattice(const FiniteLattice& L, const std::vector<FiniteElement>& S) {
  std::vector<bool> in(L.size(), false);
  for (auto s : S) in.at(s.index) = true;
  for (auto x : S)
    for (auto y : S)
      if (!in[L.meet(x, y).index] || !in[L.join(x, y).index]) return false;
  return true;
}

std::vector<std::vector<FiniteElement>> enumerate_sublattices(const FiniteLattice& L) {
  const std::size_t n = L.size();
  if (n > 16) throw std::invalid_argument("sublattice enumeration is limited to 16 elements");
  std::vector<std::vector<FiniteElement>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<FiniteElement> S;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) S.push_back(FiniteElement{i});
    if (is_sublattice(L, S)) out.push_back(std::move(S));
  }
  return out;
}

PhResult ph_criterion(const FiniteLattice& L, const std::vector<FiniteElement>& S, const FiniteFamily& D) {
  if (S.empty()) throw std::invalid_argument("ph_criterion: S is empty");
  if (!is_sublattice(L, S)) throw std::invalid_argument("ph_criterion: S is not a sublattice");
  PhResult r;
  const bool hausdorff = zero_distance_classes(L, D).discrete();
  for (auto x : L.elements()) {
    auto sup = L.meet(S.front(), x);
    auto inf = L.join(S.front(), x);
    for (auto s : S) {
      sup = L.join(sup, L.meet(s, x));
      inf = L.meet(inf, L.join(s, x));
    }
    if (sup != x || inf != x) {
      r.failing_element = x;
      break;
    }
  }
  r.criterion = hausdorff && !r.failing_element;
  r.kernel_hausdorff = zero_distance_classes(L, ustar_family(L, D, canonical_pairs(L, S))).discrete();
  return r;
}

std::vector<FiniteElement> kernel_closure(const FiniteLattice& L, const FiniteFamily& D,
                                          const std::vector<FiniteElement>& S) {
  std::vector<FiniteElement> out;
  for (auto x : L.elements())
    for (auto s : S)
      if (D.all_zero(x, s)) {
        out.push_back(x);
        break;
      }
  return out;
}

std::vector<FiniteElement> join_irreducibles(const FiniteLattice& L) {
  std::vector<std::size_t> lower_covers(L.size(), 0);
  for (auto [lo, hi] : L.covers()) ++lower_covers[hi.index];
  std::vector<FiniteElement> out;
  for (auto x : L.elements())
    if (lower_covers[x.index] == 1) out.push_back(x);
  return out;
}

LatticeSemimetric<FiniteElement> indicator_semimetric(const FiniteLattice& L, FiniteElement c) {
  return make_semimetric<FiniteElement>("split:" + L.element_name(c), [L, c](FiniteElement x, FiniteElement y) {
    return ExtValue(leq(L, c, x) == leq(L, c, y) ? 0L : 1L);
  });
}

LatticeSemimetric<FiniteElement> valuation_semimetric(const FiniteLattice& L) {
  const auto irreducibles = join_irreducibles(L);
  return make_semimetric<FiniteElement>("valuation", [L, irreducibles](FiniteElement x, FiniteElement y) {
    long total = 0;
    for (auto c : irreducibles) total += leq(L, c, x) != leq(L, c, y) ? 1 : 0;
    return ExtValue(total);
  });
}

LatticeSemimetric<FiniteElement> load_semimetric_table(const FiniteLattice& L, std::string_view text,
                                                       std::string name) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("semimetric document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("distances") || !doc["distances"].is_array())
    throw std::invalid_argument("semimetric document needs a \"distances\" array");
  if (doc.contains("carrier") && doc["carrier"] != L.name())
    throw std::invalid_argument("semimetric table is for carrier " + doc["carrier"].dump() + ", not '" + L.name() +
                                "'");
  const std::size_t n = L.size();
  std::vector<std::optional<ExtValue>> table(n * n);
  for (const auto& row : doc["distances"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_unsigned() || !row[1].is_number_unsigned() ||
        !row[2].is_string())
      throw std::invalid_argument("each distance must be [i, j, \"p/q\" or \"inf\"], got " + row.dump());
    const auto i = row[0].get<std::size_t>();
    const auto j = row[1].get<std::size_t>();
    if (i >= n || j >= n) throw std::invalid_argument("distance " + row.dump() + " refers to an unknown element");
    const ExtValue v = ExtValue::parse(row[2].get<std::string>());
    if (i == j && !v.is_zero())
      throw std::invalid_argument("nonzero diagonal distance at " + L.element_name(L.element(i)));
    for (auto slot : {i * n + j, j * n + i}) {
      if (table[slot] && *table[slot] != v)
        throw std::invalid_argument("asymmetric distances for (" + L.element_name(L.element(i)) + ", " +
                                    L.element_name(L.element(j)) + ")");
      table[slot] = v;
    }
  }
  auto values = std::make_shared<std::vector<ExtValue>>(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!table[i * n + j])
        throw std::invalid_argument("missing distance for (" + L.element_name(L.element(i)) + ", " +
                                    L.element_name(L.element(j)) + ")");
      (*values)[i * n + j] = *table[i * n + j];
    }
  return make_semimetric<FiniteElement>(
      std::move(name), [values, n](FiniteElement x, FiniteElement y) { return values->at(x.index * n + y.index); });
}

std::string semimetric_table_to_json(const FiniteLattice& L, const LatticeSemimetric<FiniteElement>& d) {
  nlohmann::ordered_json doc;
  doc["carrier"] = L.name();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      rows.push_back({i, j, d(L.element(i), L.element(j)).str()});
  doc["distances"] = std::move(rows);
  return doc.dump();
}

}  // namespace ulat
