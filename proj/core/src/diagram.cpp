#include "reeb/diagram.hpp"

#include <algorithm>

namespace reeb {

std::string kind_name(PairKind k) {
  switch (k) {
    case PairKind::Ext0: return "ext0";
    case PairKind::Ord0: return "ord0";
    case PairKind::Rel1: return "rel1";
    case PairKind::Ext1: return "ext1";
  }
  return "?";
}

std::optional<PairKind> kind_from_name(const std::string& name) {
  if (name == "ext0") return PairKind::Ext0;
  if (name == "ord0") return PairKind::Ord0;
  if (name == "rel1") return PairKind::Rel1;
  if (name == "ext1") return PairKind::Ext1;
  return std::nullopt;
}

std::vector<PersistencePair> ExtendedDiagram::of_kind(PairKind k) const {
  std::vector<PersistencePair> out;
  for (const auto& p : points)
    if (p.kind == k) out.push_back(p);
  return out;
}

namespace {

bool pair_order(const PersistencePair& a, const PersistencePair& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.low != b.low) return a.low < b.low;
  return a.high < b.high;
}

} // namespace

std::vector<PersistencePair> sorted_points(const ExtendedDiagram& d) {
  std::vector<PersistencePair> pts = d.points;
  std::sort(pts.begin(), pts.end(), pair_order);
  return pts;
}

bool diagram_equal(const ExtendedDiagram& a, const ExtendedDiagram& b, double tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be >= 0");
  for (PairKind k : kAllKinds) {
    auto pa = ExtendedDiagram{a.of_kind(k)};
    auto pb = ExtendedDiagram{b.of_kind(k)};
    if (pa.size() != pb.size()) return false;
    auto sa = sorted_points(pa);
    auto sb = sorted_points(pb);
    for (std::size_t i = 0; i < sa.size(); ++i)
      if (!approx_eq(sa[i].low, sb[i].low, tol) || !approx_eq(sa[i].high, sb[i].high, tol))
        return false;
  }
  return true;
}

} // namespace reeb
