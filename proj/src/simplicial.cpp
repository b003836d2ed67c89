#include "loopcalc/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "loopcalc/error.hpp"

namespace loopcalc {

Face face_of(const std::vector<int>& vertices) {
  Face f = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw Error(ErrorCode::InvalidComplex, "vertex " + std::to_string(v) + " out of range");
    f |= Face{1} << (v - 1);
  }
  return f;
}

std::vector<int> vertices_of(Face f) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (f & (Face{1} << i)) out.push_back(i + 1);
  return out;
}

int face_size(Face f) { return std::popcount(f); }

namespace {

void check_m(int m) {
  if (m < 0 || m > kMaxVertices)
    throw Error(ErrorCode::InvalidComplex, "vertex count must be in 0.." + std::to_string(kMaxVertices));
}

Face all_vertices(int m) { return m == 0 ? 0 : (Face{1} << m) - 1; }

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<Face> faces) : m_(m), faces_(std::move(faces)) {}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets) {
  check_m(m);
  std::vector<bool> in(std::size_t{1} << m, false);
  in[0] = true;
  for (const auto& facet : facets) {
    Face f = face_of(facet);
    if (f & ~all_vertices(m)) throw Error(ErrorCode::InvalidComplex, "facet uses a vertex above m");
    // every subset of f
    for (Face s = f;; s = (s - 1) & f) {
      in[s] = true;
      if (s == 0) break;
    }
  }
  std::vector<Face> faces;
  for (Face f = 0; f < in.size(); ++f)
    if (in[f]) faces.push_back(f);
  return SimplicialComplex(m, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<Face> faces) {
  check_m(m);
  faces.push_back(0);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Face f : faces) {
    if (f & ~all_vertices(m)) throw Error(ErrorCode::InvalidComplex, "face uses a vertex above m");
    for (Face bit = f; bit; bit &= bit - 1) {
      Face sub = f & ~(bit & -bit);
      if (!std::binary_search(faces.begin(), faces.end(), sub))
        throw Error(ErrorCode::InvalidComplex, "not downward closed");
    }
  }
  return SimplicialComplex(m, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("m").get<int>();
    auto facets = j.at("facets").get<std::vector<std::vector<int>>>();
    return from_facets(m, facets);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidComplex, std::string("complex JSON: ") + e.what());
  }
}

nlohmann::json SimplicialComplex::to_json() const {
  nlohmann::json facets = nlohmann::json::array();
  for (Face f : this->facets()) facets.push_back(vertices_of(f));
  return {{"m", m_}, {"facets", facets}};
}

SimplicialComplex SimplicialComplex::points(int m) {
  std::vector<std::vector<int>> facets;
  for (int i = 1; i <= m; ++i) facets.push_back({i});
  return from_facets(m, facets);
}

SimplicialComplex SimplicialComplex::simplex(int m) {
  std::vector<int> all;
  for (int i = 1; i <= m; ++i) all.push_back(i);
  return from_facets(m, {all});
}

bool SimplicialComplex::contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (f == 0 && faces_.size() > 1) continue;
    bool maximal = true;
    for (int v = 0; v < m_ && maximal; ++v) {
      Face bit = Face{1} << v;
      if (!(f & bit) && contains(f | bit)) maximal = false;
    }
    if (maximal && f != 0) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) { return vertices_of(a) < vertices_of(b); });
  return out;
}

std::vector<Face> missing_faces(const SimplicialComplex& k) {
  std::vector<Face> out;
  const Face top = all_vertices(k.m());
  for (Face f = 1; f <= top && f != 0; ++f) {
    if (k.contains(f)) continue;
    bool boundary = true;
    for (Face bit = f; bit && boundary; bit &= bit - 1)
      if (!k.contains(f & ~(bit & -bit))) boundary = false;
    if (boundary) out.push_back(f);
    if (f == top) break;
  }
  return out;
}

namespace {

void require_missing(const SimplicialComplex& k, Face f) {
  bool ok = f != 0 && !(f & ~all_vertices(k.m())) && !k.contains(f);
  for (Face bit = f; bit && ok; bit &= bit - 1)
    if (!k.contains(f & ~(bit & -bit))) ok = false;
  if (!ok) {
    std::string v;
    for (int i : vertices_of(f)) v += (v.empty() ? "" : ",") + std::to_string(i);
    throw Error(ErrorCode::NotAMissingFace, "{" + v + "}");
  }
}

}  // namespace

SimplicialComplex add_faces(const SimplicialComplex& k, const std::vector<Face>& s) {
  std::vector<Face> faces = k.faces();
  for (Face f : s) {
    require_missing(k, f);
    faces.push_back(f);
  }
  return SimplicialComplex::from_faces(k.m(), std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int t) {
  std::vector<Face> faces;
  for (Face f : k.faces())
    if (face_size(f) <= t + 1) faces.push_back(f);
  return SimplicialComplex::from_faces(k.m(), std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, Face i) {
  std::vector<Face> faces;
  for (Face f : k.faces())
    if ((f & ~i) == 0) faces.push_back(f);
  return SimplicialComplex::from_faces(k.m(), std::move(faces));
}

namespace {

std::vector<GradedSeries> reduced_series(const std::vector<Expr>& spaces, FieldTag field, int cap) {
  std::vector<GradedSeries> out;
  for (const Expr& x : spaces) out.push_back(series_of(x, field, cap, true));
  return out;
}

}  // namespace

GradedSeries polyprod_series(const SimplicialComplex& k, const std::vector<Expr>& spaces, FieldTag field, int cap) {
  if (static_cast<int>(spaces.size()) != k.m())
    throw Error(ErrorCode::Parameter, "need " + std::to_string(k.m()) + " spaces, got " + std::to_string(spaces.size()));
  std::vector<GradedSeries> x = reduced_series(spaces, field, cap);
  GradedSeries total(field, cap, true);
  for (Face f : k.faces()) {
    if (f == 0) continue;
    GradedSeries term = GradedSeries::one(field, cap);
    for (int v : vertices_of(f)) term = term * x[static_cast<std::size_t>(v - 1)];
    total = total + term;
  }
  total.set_reduced(true);
  return total;
}

Expr missing_face_wedge(const SimplicialComplex& k, const std::vector<Face>& s, const std::vector<Expr>& spaces) {
  if (static_cast<int>(spaces.size()) != k.m())
    throw Error(ErrorCode::Parameter, "need " + std::to_string(k.m()) + " spaces, got " + std::to_string(spaces.size()));
  std::vector<Expr> summands;
  for (Face f : s) {
    if (face_size(f) < 2) throw Error(ErrorCode::MissingFaceTooSmall, "missing faces need at least two vertices");
    require_missing(k, f);
    std::vector<Expr> factors;
    for (int v : vertices_of(f)) factors.push_back(spaces[static_cast<std::size_t>(v - 1)]);
    summands.push_back(Expr::suspend(Expr::smash(std::move(factors)), face_size(f) - 2));
  }
  if (summands.empty()) return Expr::point();
  if (summands.size() == 1) return summands.front();
  return Expr::wedge(std::move(summands));
}

GradedSeries polywh_domain_series(const std::vector<Expr>& spaces, const Expr& a, FieldTag field, int cap) {
  GradedSeries result = series_of(Expr::suspend(a), field, cap, true);
  for (const GradedSeries& x : reduced_series(spaces, field, cap))
    result = result * invert(GradedSeries::one(field, cap) - x);
  result.set_reduced(true);
  return result;
}

}  // namespace loopcalc
