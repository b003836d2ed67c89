#pragma once

// Simplicial complexes on [m] and homology series of polyhedral products.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopcalc/expr.hpp"
#include "loopcalc/series.hpp"

namespace loopcalc {

/// Bit i-1 set for vertex i.
using Face = std::uint32_t;

inline constexpr int kMaxVertices = 20;

Face face_of(const std::vector<int>& vertices);
/// 1-indexed, ascending.
std::vector<int> vertices_of(Face f);
int face_size(Face f);

class SimplicialComplex {
 public:
  /// Downward closure of the facets (1-indexed vertices). The empty face is
  /// always present.
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
  /// Throws InvalidComplex unless `faces` is downward closed.
  static SimplicialComplex from_faces(int m, std::vector<Face> faces);
  /// {"m": 3, "facets": [[1,2],[3]]}
  static SimplicialComplex from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// m isolated vertices.
  static SimplicialComplex points(int m);
  /// The full simplex on m vertices.
  static SimplicialComplex simplex(int m);

  int m() const { return m_; }
  /// Sorted; includes the empty face.
  const std::vector<Face>& faces() const { return faces_; }
  bool contains(Face f) const;
  std::vector<Face> facets() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, std::vector<Face> faces);
  int m_ = 0;
  std::vector<Face> faces_;
};

/// σ ∉ K with every proper subset in K; sorted.
std::vector<Face> missing_faces(const SimplicialComplex& k);
/// K ∪ S. Throws NotAMissingFace.
SimplicialComplex add_faces(const SimplicialComplex& k, const std::vector<Face>& s);
/// Faces of dimension <= t.
SimplicialComplex skeleton(const SimplicialComplex& k, int t);
/// Faces contained in I; vertices outside I stay as ghost vertices.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Face i);

/// Reduced series of (X,*)^K: Σ over nonempty faces of ∏ x̃_i.
GradedSeries polyprod_series(const SimplicialComplex& k, const std::vector<Expr>& spaces, FieldTag field, int cap);

/// ∨_{σ∈S} Σ^{|σ|-2} X_{i_1}∧...∧X_{i_k}. Throws MissingFaceTooSmall for
/// faces with fewer than two vertices and NotAMissingFace.
Expr missing_face_wedge(const SimplicialComplex& k, const std::vector<Face>& s, const std::vector<Expr>& spaces);

/// (∏ 1/(1 - x̃_i)) · reduced series of ΣA.
GradedSeries polywh_domain_series(const std::vector<Expr>& spaces, const Expr& a, FieldTag field, int cap);

}  // namespace loopcalc
