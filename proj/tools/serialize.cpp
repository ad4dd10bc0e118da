#include "serialize.hpp"

#include <sstream>

namespace yfuse::cli {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SkewShape& s) { return Json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

Json to_json(const StandardTableau& t) {
  Json filling = Json::array();
  for (int k = 1; k <= t.size(); ++k) filling.push_back(Json::array({t.cell(k).i, t.cell(k).j, k}));
  return Json{{"outer", to_json(t.shape().outer())}, {"inner", to_json(t.shape().inner())}, {"filling", filling}};
}

Json to_json(const GroupAlgebraQ& a) {
  Json out = Json::array();
  for (const auto& [s, c] : a.terms()) out.push_back(Json::array({s.cycle_str(), c.str()}));
  return out;
}

namespace {

template <typename Scalar>
Json matrix_json(const Mat<Scalar>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json to_json(const MatQ& m) { return matrix_json(m); }
Json to_json(const MatF& m) { return matrix_json(m); }

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not an integer: '" + item + "'");
    }
    if (used != item.size() || v < 0) throw Error(ErrorKind::InvalidInput, "not a nonnegative integer: '" + item + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

StandardTableau tableau_from_json(const Json& j) {
  try {
    const Partition outer(j.at("outer").get<std::vector<int>>());
    const Partition inner(j.contains("inner") ? j.at("inner").get<std::vector<int>>() : std::vector<int>{});
    const SkewShape shape(outer, inner);
    std::vector<Cell> positions(static_cast<std::size_t>(shape.size()));
    std::vector<bool> seen(positions.size(), false);
    for (const auto& e : j.at("filling")) {
      const auto v = e.get<std::vector<int>>();
      if (v.size() != 3 || v[2] < 1 || v[2] > shape.size() || seen[static_cast<std::size_t>(v[2] - 1)])
        throw Error(ErrorKind::InvalidInput, "filling entries must be [i, j, k] with distinct k in 1..n");
      seen[static_cast<std::size_t>(v[2] - 1)] = true;
      positions[static_cast<std::size_t>(v[2] - 1)] = Cell{v[0], v[1]};
    }
    for (bool b : seen)
      if (!b) throw Error(ErrorKind::InvalidInput, "filling does not cover the shape");
    return StandardTableau(shape, positions);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed tableau JSON: ") + e.what());
  }
}

}  // namespace yfuse::cli
