#include "h10/compiler/fold.hpp"

#include <algorithm>
#include <stdexcept>

namespace h10 {

namespace {

struct Folder {
  FoldedEquation& out;

  int push(ExprNode n) {
    out.nodes.push_back(std::move(n));
    return static_cast<int>(out.nodes.size()) - 1;
  }

  int combine(int a, int b) {
    ExprNode n;
    n.kind = ExprNode::Kind::combine;
    n.children = {a, b};
    return push(std::move(n));
  }

  // Balanced, so nested conjunctions grow the degree by a factor 2 per level
  // of a binary tree rather than per conjunct.
  int combine_all(std::vector<int> ids) {
    while (ids.size() > 1) {
      std::vector<int> next;
      for (std::size_t i = 0; i + 1 < ids.size(); i += 2) next.push_back(combine(ids[i], ids[i + 1]));
      if (ids.size() % 2) next.push_back(ids.back());
      ids = std::move(next);
    }
    return ids.front();
  }

  int leaf(const MPoly& p) {
    ExprNode n;
    n.poly = p;
    return push(std::move(n));
  }

  int run(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::eq: return leaf(f.poly);
      case Formula::Kind::gate: {
        const int inner = combine(leaf(f.gate.isotropy), leaf(f.gate.pairing));
        ExprNode n;
        n.kind = ExprNode::Kind::gate_tag;
        n.children = {inner};
        n.form = f.gate.form;
        n.f_var = f.gate.f_var;
        return push(std::move(n));
      }
      case Formula::Kind::conj: {
        if (f.children.empty()) return leaf(MPoly());
        std::vector<int> ids;
        for (const auto& c : f.children) ids.push_back(run(c));
        return combine_all(std::move(ids));
      }
      case Formula::Kind::disj: {
        if (f.children.size() == 1) return run(f.children.front());
        ExprNode n;
        n.kind = ExprNode::Kind::product;
        for (const auto& c : f.children) n.children.push_back(run(c));
        return push(std::move(n));
      }
    }
    throw std::logic_error("unreachable");
  }
};

} // namespace

FoldedEquation fold(const Formula& f, const Polynomial& h) {
  combine_conj(MPoly(), MPoly(), h);  // validates h
  FoldedEquation out;
  out.h = h;
  Folder folder{out};
  out.root = folder.run(f);
  return out;
}

std::string to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::zero: return "zero";
    case ZeroStatus::nonzero: return "nonzero";
    case ZeroStatus::unknown: return "unknown";
  }
  return {};
}

ZeroStatus zero_status(const FoldedEquation& e, const Assignment& values, const HParams& h) {
  std::vector<ZeroStatus> st(e.nodes.size(), ZeroStatus::unknown);
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const ExprNode& n = e.nodes[i];
    switch (n.kind) {
      case ExprNode::Kind::poly: {
        const auto v = evaluate(n.poly, values);
        st[i] = !v ? ZeroStatus::unknown : v->is_zero() ? ZeroStatus::zero : ZeroStatus::nonzero;
        break;
      }
      case ExprNode::Kind::product: {
        bool unknown = false, zero = false;
        for (int c : n.children) {
          zero |= st[static_cast<std::size_t>(c)] == ZeroStatus::zero;
          unknown |= st[static_cast<std::size_t>(c)] == ZeroStatus::unknown;
        }
        st[i] = zero ? ZeroStatus::zero : unknown ? ZeroStatus::unknown : ZeroStatus::nonzero;
        break;
      }
      case ExprNode::Kind::combine: {
        const ZeroStatus a = st[static_cast<std::size_t>(n.children[0])];
        const ZeroStatus b = st[static_cast<std::size_t>(n.children[1])];
        if (a == ZeroStatus::nonzero || b == ZeroStatus::nonzero) st[i] = ZeroStatus::nonzero;
        else if (a == ZeroStatus::zero && b == ZeroStatus::zero) st[i] = ZeroStatus::zero;
        else st[i] = ZeroStatus::unknown;
        break;
      }
      case ExprNode::Kind::gate_tag: {
        const auto& f = values.at(static_cast<std::size_t>(n.f_var));
        if (!f) st[i] = ZeroStatus::unknown;
        else st[i] = gate_form_isotropic(*f, n.form, h) ? ZeroStatus::zero : ZeroStatus::nonzero;
        break;
      }
    }
  }
  return st.at(static_cast<std::size_t>(e.root));
}

std::optional<RationalFunction> value(const FoldedEquation& e, const Assignment& values) {
  std::vector<std::optional<RationalFunction>> v(e.nodes.size());
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const ExprNode& n = e.nodes[i];
    auto child = [&](std::size_t k) { return v[static_cast<std::size_t>(n.children[k])]; };
    switch (n.kind) {
      case ExprNode::Kind::poly: v[i] = evaluate(n.poly, values); break;
      case ExprNode::Kind::product: {
        RationalFunction p(1);
        bool known = true;
        for (std::size_t k = 0; k < n.children.size(); ++k) {
          if (!child(k)) known = false;
          else if (child(k)->is_zero()) {
            v[i] = RationalFunction();
            break;
          } else p *= *child(k);
        }
        if (!v[i] && known) v[i] = p;
        break;
      }
      case ExprNode::Kind::combine:
        if (child(0) && child(1)) v[i] = homogenized(e.h, *child(0), *child(1));
        break;
      case ExprNode::Kind::gate_tag: v[i] = child(0); break;
    }
  }
  return v.at(static_cast<std::size_t>(e.root));
}

MPoly expand(const FoldedEquation& e) {
  std::vector<MPoly> v(e.nodes.size());
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const ExprNode& n = e.nodes[i];
    switch (n.kind) {
      case ExprNode::Kind::poly: v[i] = n.poly; break;
      case ExprNode::Kind::product:
        v[i] = MPoly(1);
        for (int c : n.children) v[i] *= v[static_cast<std::size_t>(c)];
        break;
      case ExprNode::Kind::combine:
        v[i] = homogenized(e.h, v[static_cast<std::size_t>(n.children[0])], v[static_cast<std::size_t>(n.children[1])]);
        break;
      case ExprNode::Kind::gate_tag: v[i] = v[static_cast<std::size_t>(n.children[0])]; break;
    }
  }
  return v.at(static_cast<std::size_t>(e.root));
}

int degree(const FoldedEquation& e, const VarTable& vars) {
  std::vector<int> d(e.nodes.size());
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const ExprNode& n = e.nodes[i];
    switch (n.kind) {
      case ExprNode::Kind::poly: d[i] = std::max(0, n.poly.degree(&vars, true)); break;
      case ExprNode::Kind::product:
        d[i] = 0;
        for (int c : n.children) d[i] += d[static_cast<std::size_t>(c)];
        break;
      case ExprNode::Kind::combine:
        d[i] = e.h.degree() * std::max(d[static_cast<std::size_t>(n.children[0])], d[static_cast<std::size_t>(n.children[1])]);
        break;
      case ExprNode::Kind::gate_tag: d[i] = d[static_cast<std::size_t>(n.children[0])]; break;
    }
  }
  return d.at(static_cast<std::size_t>(e.root));
}

json::Json encode(const FoldedEquation& e, const VarTable& vars) {
  using json::Json;
  Json nodes = Json::array();
  for (const auto& n : e.nodes) {
    Json j;
    switch (n.kind) {
      case ExprNode::Kind::poly: j["poly"] = encode(n.poly, vars); break;
      case ExprNode::Kind::product: j["product"] = n.children; break;
      case ExprNode::Kind::combine: j["combine"] = n.children; break;
      case ExprNode::Kind::gate_tag:
        j["gate"] = Json{{"form", n.form}, {"f", vars[n.f_var].name}, {"of", n.children.front()}};
        break;
    }
    nodes.push_back(j);
  }
  return Json{{"combiner", json::encode(e.h)}, {"root", e.root}, {"nodes", nodes}};
}

} // namespace h10
