#include "braidcx/delta_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "braidcx/error.hpp"

namespace braidcx {

std::size_t DeltaComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return cells_[static_cast<std::size_t>(d)].size();
}

std::size_t DeltaComplex::total_cells() const {
  std::size_t n = 0;
  for (const auto& level : cells_) n += level.size();
  return n;
}

std::vector<std::size_t> DeltaComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : cells_) f.push_back(level.size());
  return f;
}

std::optional<CellRef> DeltaComplex::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

CellRef DeltaComplex::at(std::string_view id) const {
  if (auto c = find(id)) return *c;
  throw DomainError("complex: unknown cell id '" + std::string(id) + "'");
}

const std::vector<std::size_t>& DeltaComplex::vertices(CellRef c) const {
  return vertices_[static_cast<std::size_t>(c.dim)][c.index];
}

const std::vector<std::size_t>& DeltaComplex::cofaces(CellRef c) const {
  return cofaces_[static_cast<std::size_t>(c.dim)][c.index];
}

void DeltaComplex::index() {
  by_id_.clear();
  vertices_.assign(cells_.size(), {});
  cofaces_.assign(cells_.size(), {});
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    vertices_[d].resize(cells_[d].size());
    cofaces_[d].resize(cells_[d].size());
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      by_id_.emplace(cells_[d][i].id, CellRef{static_cast<int>(d), i});
      auto& verts = vertices_[d][i];
      if (d == 0) {
        verts = {i};
        continue;
      }
      const auto& faces = cells_[d][i].faces;
      // Slots 0..d-1 survive in face d; slot d is the last slot of face d-1.
      verts = vertices_[d - 1][faces[d]];
      verts.push_back(vertices_[d - 1][faces[d - 1]].back());
      for (std::size_t f : faces) {
        auto& up = cofaces_[d - 1][f];
        if (up.empty() || up.back() != i) up.push_back(i);
      }
    }
  }
}

bool DeltaComplex::is_strict() const {
  for (std::size_t d = 1; d < cells_.size(); ++d)
    for (const auto& verts : vertices_[d]) {
      std::vector<std::size_t> sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
  return true;
}

DeltaComplex DeltaComplex::subcomplex(const std::function<bool(CellRef)>& keep) const {
  DeltaComplex::Builder b;
  for (int d = 0; d <= dimension(); ++d)
    for (std::size_t i = 0; i < count(d); ++i) {
      const CellRef c{d, i};
      if (!keep(c)) continue;
      std::vector<std::string> faces;
      for (std::size_t f : cell(c).faces) {
        if (!keep(CellRef{d - 1, f}))
          throw DomainError("subcomplex: cell '" + id(c) + "' kept without its faces");
        faces.push_back(cells_[static_cast<std::size_t>(d - 1)][f].id);
      }
      b.add(d, id(c), std::move(faces));
    }
  return b.build();
}

DeltaComplex DeltaComplex::skeleton(int k) const {
  return subcomplex([k](CellRef c) { return c.dim <= k; });
}

DeltaComplex DeltaComplex::full_subcomplex(const std::function<bool(std::size_t)>& keep_vertex) const {
  return subcomplex([&](CellRef c) {
    const auto& verts = vertices(c);
    return std::all_of(verts.begin(), verts.end(), keep_vertex);
  });
}

std::vector<CellRef> DeltaComplex::strict_star(CellRef c) const {
  std::vector<CellRef> out;
  std::vector<std::size_t> frontier = {c.index};
  for (int d = c.dim; d < dimension() && !frontier.empty(); ++d) {
    std::set<std::size_t> next;
    for (std::size_t i : frontier)
      for (std::size_t up : cofaces(CellRef{d, i})) next.insert(up);
    frontier.assign(next.begin(), next.end());
    for (std::size_t i : frontier) out.push_back(CellRef{d + 1, i});
  }
  return out;
}

DeltaComplex::Builder& DeltaComplex::Builder::add(int dim, std::string id, std::vector<std::string> faces) {
  if (dim < 0) throw DomainError("complex: negative cell dimension");
  if (auto it = dims_.find(id); it != dims_.end()) {
    const auto& p = pending_[it->second];
    if (p.dim == dim && p.faces == faces) return *this;
    throw DomainError("complex: duplicate cell id '" + id + "'");
  }
  dims_.emplace(id, pending_.size());
  pending_.push_back({dim, std::move(id), std::move(faces)});
  return *this;
}

DeltaComplex::Builder& DeltaComplex::Builder::add_all(const DeltaComplex& other) {
  for (int d = 0; d <= other.dimension(); ++d)
    for (const auto& c : other.cells(d)) {
      std::vector<std::string> faces;
      for (std::size_t f : c.faces) faces.push_back(other.cells(d - 1)[f].id);
      add(d, c.id, std::move(faces));
    }
  return *this;
}

DeltaComplex DeltaComplex::Builder::build() const {
  DeltaComplex out;
  int top = -1;
  for (const auto& p : pending_) top = std::max(top, p.dim);
  std::vector<std::vector<const Pending*>> levels(static_cast<std::size_t>(top + 1));
  for (const auto& p : pending_) levels[static_cast<std::size_t>(p.dim)].push_back(&p);
  for (auto& level : levels)
    std::sort(level.begin(), level.end(), [](const Pending* a, const Pending* b) { return a->id < b->id; });

  out.cells_.resize(levels.size());
  std::unordered_map<std::string, std::size_t> previous;
  for (std::size_t d = 0; d < levels.size(); ++d) {
    std::unordered_map<std::string, std::size_t> current;
    for (const Pending* p : levels[d]) {
      if (d > 0 && p->faces.size() != d + 1)
        throw DomainError("complex: cell '" + p->id + "' of dimension " + std::to_string(d) + " needs " +
                          std::to_string(d + 1) + " faces");
      if (d == 0 && !p->faces.empty()) throw DomainError("complex: vertex '" + p->id + "' has faces");
      Cell c{p->id, {}};
      for (const auto& f : p->faces) {
        auto it = previous.find(f);
        if (it == previous.end())
          throw DomainError("complex: face '" + f + "' of '" + p->id + "' is not a cell of dimension " +
                            std::to_string(d - 1));
        c.faces.push_back(it->second);
      }
      current.emplace(c.id, out.cells_[d].size());
      out.cells_[d].push_back(std::move(c));
    }
    if (d > 0 && levels[d].size() > 0 && levels[d - 1].empty())
      throw DomainError("complex: missing cells in dimension " + std::to_string(d - 1));
    previous = std::move(current);
  }

  // d_i d_j = d_{j-1} d_i for i < j.
  for (std::size_t d = 2; d < out.cells_.size(); ++d)
    for (const auto& c : out.cells_[d])
      for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          const auto& lower = out.cells_[d - 1];
          if (lower[c.faces[j]].faces[i] != lower[c.faces[i]].faces[j - 1])
            throw DomainError("complex: cell '" + c.id + "' violates the simplicial identities");
        }
  out.index();
  return out;
}

std::string brace_id(const std::vector<std::string>& vertex_labels, const std::vector<std::size_t>& simplex) {
  std::string s = "{";
  for (std::size_t k = 0; k < simplex.size(); ++k) {
    if (k) s += ',';
    s += vertex_labels[simplex[k]];
  }
  return s + "}";
}

DeltaComplex simplicial_complex(
    const std::vector<std::string>& vertex_labels, std::vector<std::vector<std::size_t>> simplices,
    const std::function<std::string(const std::vector<std::size_t>&)>& simplex_id) {
  std::set<std::vector<std::size_t>> all;
  std::vector<std::vector<std::size_t>> stack;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty()) stack.push_back(s);
  }
  while (!stack.empty()) {
    auto s = std::move(stack.back());
    stack.pop_back();
    if (!all.insert(s).second || s.size() == 1) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
      if (!all.count(f)) stack.push_back(std::move(f));
    }
  }
  std::map<std::vector<std::size_t>, std::string> ids;
  for (const auto& s : all) {
    if (s.front() >= vertex_labels.size()) throw DomainError("simplicial complex: vertex index out of range");
    ids.emplace(s, s.size() == 1 ? vertex_labels[s.front()] : simplex_id(s));
  }
  DeltaComplex::Builder b;
  for (const auto& [s, id] : ids) {
    std::vector<std::string> faces;
    if (s.size() > 1)
      for (std::size_t k = 0; k < s.size(); ++k) {
        auto f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        faces.push_back(ids.at(f));
      }
    b.add(static_cast<int>(s.size()) - 1, id, std::move(faces));
  }
  return b.build();
}

Poset cell_poset(const DeltaComplex& complex) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int d = 0; d <= complex.dimension(); ++d)
    for (const auto& c : complex.cells(d)) {
      ids.push_back(c.id);
      std::vector<std::size_t> faces = c.faces;
      std::sort(faces.begin(), faces.end());
      faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
      for (std::size_t f : faces) rel.emplace_back(complex.cells(d - 1)[f].id, c.id);
    }
  return Poset(std::move(ids), rel);
}

namespace {

std::string chain_id(const Poset& poset, const std::vector<std::size_t>& chain) {
  if (chain.size() == 1) return poset.id(chain.front());
  std::string s = "(";
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) s += " < ";
    s += poset.id(chain[k]);
  }
  return s + ")";
}

}  // namespace

DeltaComplex order_complex(const Poset& poset) {
  DeltaComplex::Builder b;
  std::vector<std::vector<std::size_t>> above(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) above[i] = poset.strictly_above(i);

  std::vector<std::size_t> chain;
  std::function<void()> extend = [&]() {
    std::vector<std::string> faces;
    if (chain.size() > 1)
      for (std::size_t k = 0; k < chain.size(); ++k) {
        auto f = chain;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        faces.push_back(chain_id(poset, f));
      }
    b.add(static_cast<int>(chain.size()) - 1, chain_id(poset, chain), std::move(faces));
    for (std::size_t next : above[chain.back()]) {
      chain.push_back(next);
      extend();
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < poset.size(); ++i) {
    chain = {i};
    extend();
  }
  return b.build();
}

DeltaComplex link_complex(const DeltaComplex& complex, CellRef c) {
  const auto star = complex.strict_star(c);
  std::set<std::pair<int, std::size_t>> in_star;
  for (const auto& e : star) in_star.emplace(e.dim, e.index);

  DeltaComplex::Builder b;
  for (const auto& e : star) {
    const auto& verts = complex.vertices(e);
    std::vector<std::size_t> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("link: cell '" + complex.id(e) + "' identifies faces; complex is not strict");
    const int link_dim = e.dim - c.dim - 1;
    std::vector<std::string> faces;
    if (link_dim > 0)
      for (std::size_t f : complex.cell(e).faces)
        if (in_star.count({e.dim - 1, f})) faces.push_back(complex.cells(e.dim - 1)[f].id);
    b.add(link_dim, complex.id(e), std::move(faces));
  }
  return b.build();
}

}  // namespace braidcx
