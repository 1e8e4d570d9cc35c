#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "braidcx/poset.hpp"

namespace braidcx {

/// A d-cell: its id and d+1 ordered faces (indices into the (d-1)-cells).
/// Face i deletes vertex slot i.
struct Cell {
  std::string id;
  std::vector<std::size_t> faces;
};

struct CellRef {
  int dim = -1;
  std::size_t index = 0;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// A Delta-complex given by graded cells with ordered face maps.
///
/// Cells of each dimension are sorted by id, so indices are canonical. Ids are
/// unique across all dimensions. Immutable once built.
class DeltaComplex {
 public:
  class Builder;

  DeltaComplex() = default;

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const { return cells_.empty(); }
  std::size_t count(int d) const;
  std::size_t total_cells() const;
  std::vector<std::size_t> f_vector() const;

  const std::vector<Cell>& cells(int d) const { return cells_[static_cast<std::size_t>(d)]; }
  const Cell& cell(CellRef c) const { return cells_[static_cast<std::size_t>(c.dim)][c.index]; }
  const std::string& id(CellRef c) const { return cell(c).id; }

  std::optional<CellRef> find(std::string_view id) const;
  /// Throws DomainError for unknown ids.
  CellRef at(std::string_view id) const;

  /// Vertex (0-cell index) in each slot of the cell, slot order.
  const std::vector<std::size_t>& vertices(CellRef c) const;
  /// (d+1)-cells having c among their faces, without duplicates.
  const std::vector<std::size_t>& cofaces(CellRef c) const;

  /// No cell identifies two of its faces; equivalently slot vertices are distinct.
  bool is_strict() const;

  /// Drops all cells above dimension k.
  DeltaComplex skeleton(int k) const;
  /// Subcomplex of cells accepted by `keep`; must be closed under faces.
  DeltaComplex subcomplex(const std::function<bool(CellRef)>& keep) const;
  /// Cells all of whose vertices satisfy `keep_vertex` (a full subcomplex).
  DeltaComplex full_subcomplex(const std::function<bool(std::size_t)>& keep_vertex) const;

  /// Cells of the star of c excluding c, for strict complexes: every coface
  /// chain above c. Returned as CellRefs sorted by (dim, index).
  std::vector<CellRef> strict_star(CellRef c) const;

 private:
  friend class Builder;
  void index();

  std::vector<std::vector<Cell>> cells_;
  std::unordered_map<std::string, CellRef> by_id_;
  std::vector<std::vector<std::vector<std::size_t>>> vertices_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

/// Accumulates cells by id in any order and produces a canonical DeltaComplex.
/// `build` validates face counts, dimensions and the simplicial identities.
class DeltaComplex::Builder {
 public:
  /// Adds a `dim`-cell whose faces are given by id in slot order.
  Builder& add(int dim, std::string id, std::vector<std::string> faces);
  /// Adds every cell of another complex (ids must not clash except identical cells).
  Builder& add_all(const DeltaComplex& other);
  bool contains(const std::string& id) const { return dims_.count(id) > 0; }
  DeltaComplex build() const;

 private:
  struct Pending {
    int dim;
    std::string id;
    std::vector<std::string> faces;
  };
  std::vector<Pending> pending_;
  std::unordered_map<std::string, std::size_t> dims_;  // id -> pending index
};

/// Simplicial complex on labelled vertices from a list of simplices (vertex
/// index lists). Simplices are closed downwards and vertex slots are ordered by
/// vertex index. A 0-simplex gets its vertex label as id; larger simplices
/// get `simplex_id(sorted vertex indices)`.
DeltaComplex simplicial_complex(
    const std::vector<std::string>& vertex_labels, std::vector<std::vector<std::size_t>> simplices,
    const std::function<std::string(const std::vector<std::size_t>&)>& simplex_id);

/// "{a,b,c}" built from vertex labels in slot order.
std::string brace_id(const std::vector<std::string>& vertex_labels, const std::vector<std::size_t>& simplex);

/// Elements are cells, order is the iterated face relation; heights equal dimensions.
Poset cell_poset(const DeltaComplex& complex);

/// Simplicial complex of chains p0 < p1 < ... < pd; a chain's id joins the element ids with " < ".
DeltaComplex order_complex(const Poset& poset);

/// Link of a cell in a strict Delta-complex: cells strictly above c, each of
/// dimension dim(e) - dim(c) - 1, with the faces of e that still contain c.
/// Link cells keep the ids of the cells they come from.
DeltaComplex link_complex(const DeltaComplex& complex, CellRef c);

}  // namespace braidcx
