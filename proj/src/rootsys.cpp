#include "cayley/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

VecQ vec4(long a, long b, long c, long d, long den = 1) {
  VecQ v(4);
  v << rat(a, den), rat(b, den), rat(c, den), rat(d, den);
  return v;
}

Rational dot(const VecQ& a, const VecQ& b) {
  Rational s = 0;
  for (int i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

}  // namespace

const RootSystem& f4_root_system() {
  static const RootSystem sys = [] {
    RootSystem s;
    for (int i = 0; i < 4; ++i) {
      for (int sign = -1; sign <= 1; sign += 2) {
        VecQ v = VecQ::Zero(4);
        v(i) = sign;
        s.roots.push_back(v);
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        for (int si = -1; si <= 1; si += 2) {
          for (int sj = -1; sj <= 1; sj += 2) {
            VecQ v = VecQ::Zero(4);
            v(i) = si;
            v(j) = sj;
            s.roots.push_back(v);
          }
        }
      }
    }
    for (int mask = 0; mask < 16; ++mask) {
      VecQ v(4);
      for (int i = 0; i < 4; ++i) v(i) = rat((mask >> i) & 1 ? -1 : 1, 2);
      s.roots.push_back(v);
    }
    s.simple_roots = {vec4(0, 1, -1, 0), vec4(0, 0, 1, -1), vec4(0, 0, 0, 1), vec4(1, -1, -1, -1, 2)};
    s.highest_root = vec4(1, 1, 0, 0);
    return s;
  }();
  return sys;
}

MatQ Diagram::cartan() const {
  const int n = size();
  MatQ c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = 2 * dot(nodes[i], nodes[j]) / dot(nodes[j], nodes[j]);
  }
  return c;
}

Diagram Diagram::without_nodes(const std::vector<int>& idx) const {
  Diagram out;
  for (int i = 0; i < size(); ++i) {
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.nodes.push_back(nodes[i]);
  }
  return out;
}

Diagram Diagram::permuted(const std::vector<int>& perm) const {
  Diagram out;
  out.nodes.resize(size());
  for (int i = 0; i < size(); ++i) out.nodes[i] = nodes[perm[i]];
  return out;
}

std::string Diagram::ascii() const {
  const MatQ c = cartan();
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) {
      const Rational bond = c(i - 1, i) * c(i, i - 1);
      const long m = bond.get_num().get_si();
      const Rational len_prev = dot(nodes[i - 1], nodes[i - 1]);
      const Rational len_here = dot(nodes[i], nodes[i]);
      if (m == 0) {
        out << "   ";
      } else if (m == 1) {
        out << "---";
      } else if (len_prev > len_here) {
        out << "=>=";
      } else {
        out << "=<=";
      }
    }
    out << i;
  }
  return out.str();
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const VecQ& n : nodes) {
    nlohmann::json node;
    node["length_sq"] = dot(n, n).get_str();
    nlohmann::json coords = nlohmann::json::array();
    for (int i = 0; i < n.size(); ++i) coords.push_back(n(i).get_str());
    node["root"] = coords;
    j["nodes"].push_back(std::move(node));
  }
  const MatQ c = cartan();
  j["edges"] = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    for (int k = i + 1; k < size(); ++k) {
      const Rational bond = c(i, k) * c(k, i);
      if (is_zero(bond)) continue;
      nlohmann::json edge;
      edge["a"] = i;
      edge["b"] = k;
      edge["multiplicity"] = static_cast<int>(bond.get_num().get_si());
      if (bond != 1) edge["arrow_to"] = dot(nodes[i], nodes[i]) > dot(nodes[k], nodes[k]) ? k : i;
      j["edges"].push_back(std::move(edge));
    }
  }
  j["ascii"] = ascii();
  return j;
}

Diagram f4_extended_diagram() {
  const RootSystem& sys = f4_root_system();
  Diagram d;
  d.nodes.push_back(-sys.highest_root);
  for (const VecQ& a : sys.simple_roots) d.nodes.push_back(a);
  return d;
}

namespace {

struct CatalogEntry {
  std::string name;
  std::vector<VecQ> simple_roots;
};

VecQ embed(std::initializer_list<Rational> entries) {
  VecQ v(static_cast<int>(entries.size()));
  int i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    const auto chain = [](int n) {
      std::vector<VecQ> roots;
      for (int i = 0; i < n; ++i) {
        VecQ v = VecQ::Zero(n + 1);
        v(i) = 1;
        v(i + 1) = -1;
        roots.push_back(v);
      }
      return roots;
    };
    for (int n = 1; n <= 4; ++n) out.push_back({"A" + std::to_string(n), chain(n)});
    for (int n = 2; n <= 4; ++n) {
      std::vector<VecQ> roots;
      for (int i = 0; i + 1 < n; ++i) {
        VecQ v = VecQ::Zero(n);
        v(i) = 1;
        v(i + 1) = -1;
        roots.push_back(v);
      }
      VecQ last = VecQ::Zero(n);
      last(n - 1) = 1;
      roots.push_back(last);
      out.push_back({"B" + std::to_string(n), roots});
    }
    for (int n = 3; n <= 4; ++n) {
      std::vector<VecQ> roots;
      for (int i = 0; i + 1 < n; ++i) {
        VecQ v = VecQ::Zero(n);
        v(i) = 1;
        v(i + 1) = -1;
        roots.push_back(v);
      }
      VecQ last = VecQ::Zero(n);
      last(n - 1) = 2;
      roots.push_back(last);
      out.push_back({"C" + std::to_string(n), roots});
    }
    {
      std::vector<VecQ> roots;
      for (int i = 0; i < 3; ++i) {
        VecQ v = VecQ::Zero(4);
        v(i) = 1;
        v(i + 1) = -1;
        roots.push_back(v);
      }
      VecQ last = VecQ::Zero(4);
      last(2) = 1;
      last(3) = 1;
      roots.push_back(last);
      out.push_back({"D4", roots});
    }
    out.push_back({"G2", {embed({rat(1), rat(-1), rat(0)}), embed({rat(-2), rat(1), rat(1)})}});
    out.push_back({"F4", f4_root_system().simple_roots});
    return out;
  }();
  return entries;
}

bool cartan_isomorphic(const MatQ& a, const MatQ& b) {
  const int n = static_cast<int>(a.rows());
  if (static_cast<int>(b.rows()) != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < n && match; ++i) {
      for (int j = 0; j < n && match; ++j) {
        if (a(i, j) != b(perm[i], perm[j])) match = false;
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string classify_component(const Diagram& comp) {
  const MatQ c = comp.cartan();
  for (const CatalogEntry& entry : catalog()) {
    if (static_cast<int>(entry.simple_roots.size()) != comp.size()) continue;
    Diagram cat;
    cat.nodes = entry.simple_roots;
    if (cartan_isomorphic(c, cat.cartan())) return entry.name;
  }
  throw std::runtime_error("unclassifiable diagram component");
}

}  // namespace

std::vector<std::string> delete_nodes(const Diagram& d, const std::vector<int>& idx) {
  if (idx.empty()) throw std::invalid_argument("delete_nodes wants at least one node");
  const Diagram rest = d.without_nodes(idx);
  // Connected components via the Cartan matrix.
  const MatQ c = rest.cartan();
  const int n = rest.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack = {i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (comp[w] < 0 && !is_zero(c(v, w))) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::string> names;
  for (int k = 0; k < ncomp; ++k) {
    Diagram part;
    for (int i = 0; i < n; ++i) {
      if (comp[i] == k) part.nodes.push_back(rest.nodes[i]);
    }
    names.push_back(classify_component(part));
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<BdsEntry> bds_enumerate() {
  const Diagram ext = f4_extended_diagram();
  std::vector<BdsEntry> out;
  for (int node = 1; node < ext.size(); ++node) {
    BdsEntry entry{node, delete_nodes(ext, {node})};
    const bool seen = std::any_of(out.begin(), out.end(), [&](const BdsEntry& e) { return e.types == entry.types; });
    if (!seen) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace cayley
