#include "ulat/fincof.hpp"

#include <algorithm>
#include <iterator>

namespace ulat {

namespace {

std::set<Atom> set_union(const std::set<Atom>& a, const std::set<Atom>& b) {
  std::set<Atom> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<Atom> set_intersection(const std::set<Atom>& a, const std::set<Atom>& b) {
  std::set<Atom> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<Atom> set_difference(const std::set<Atom>& a, const std::set<Atom>& b) {
  std::set<Atom> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

FinCofSet FinCofSet::initial_segment(Atom n) {
  FinCofSet s;
  for (Atom a = 1; a <= n; ++a) s.atoms.insert(s.atoms.end(), a);
  return s;
}

std::ostream& operator<<(std::ostream& os, const FinCofSet& s) {
  if (s.cofinite) os << "X\\";
  os << '{';
  bool first = true;
  for (auto a : s.atoms) {
    os << (first ? "" : ",") << 'x' << a;
    first = false;
  }
  return os << '}';
}

FinCofSet FinCofAlgebra::meet(const FinCofSet& x, const FinCofSet& y) const {
  if (!x.cofinite && !y.cofinite) return FinCofSet::finite(set_intersection(x.atoms, y.atoms));
  if (!x.cofinite) return FinCofSet::finite(set_difference(x.atoms, y.atoms));
  if (!y.cofinite) return FinCofSet::finite(set_difference(y.atoms, x.atoms));
  return FinCofSet::co(set_union(x.atoms, y.atoms));
}

FinCofSet FinCofAlgebra::join(const FinCofSet& x, const FinCofSet& y) const {
  if (!x.cofinite && !y.cofinite) return FinCofSet::finite(set_union(x.atoms, y.atoms));
  if (!x.cofinite) return FinCofSet::co(set_difference(y.atoms, x.atoms));
  if (!y.cofinite) return FinCofSet::co(set_difference(x.atoms, y.atoms));
  return FinCofSet::co(set_intersection(x.atoms, y.atoms));
}

}  // namespace ulat
