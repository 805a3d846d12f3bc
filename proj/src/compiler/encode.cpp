#include "h10/compiler/encode.hpp"

#include <algorithm>
#include <stdexcept>

namespace h10 {

namespace {

MPoly from_polynomial(const Polynomial& p, int var) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) r += MPoly(p.coeff(static_cast<std::size_t>(i))) * MPoly::var(var, i);
  return r;
}

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::out_of_range("multiple too large: " + to_string(z));
  return z.get_si();
}

} // namespace

Encoder::Encoder(HParams h, TwistedCurve curve) : curve_(std::move(curve)) {
  curve_.validate();
  formula_.h = h;
  T_ = formula_.vars.add("T", VarSort::parameter);
  a_ = formula_.vars.add("a", VarSort::constant, h.a);
  pi_ = formula_.vars.add("pi", VarSort::constant, h.pi);
  d_ = from_polynomial(curve_.d, T_);
  sample_ = u0_sample(12);
  candidates_ = default_candidates(50, 12, 0);
}

std::string Encoder::fresh_prefix(const std::string& stem) { return stem + std::to_string(++counters_[stem]); }

int Encoder::slot(const std::string& name, SlotRule rule) {
  Slot s{name, formula_.vars.add(name + ".X"), formula_.vars.add(name + ".Y"), formula_.vars.add(name + ".Z")};
  slots_.push_back(s);
  rules_.push_back(rule);
  const int id = static_cast<int>(slots_.size()) - 1;
  const MPoly x = X(id), y = Y(id), z = Z(id);
  const MPoly cubic = x.pow(3) + MPoly(curve_.a) * x + MPoly(curve_.b);
  slot_constraints_.push_back(Formula::conj({
      Formula::eq(z * z - z),
      Formula::eq(z * x),
      Formula::eq(z * y),
      Formula::eq((MPoly(1) - z) * (d_ * y * y - cubic)),
  }));
  return id;
}

int Encoder::generator_slot() {
  if (generator_ >= 0) return generator_;
  generator_ = slot("G", {SlotRule::Kind::multiple, -1, 1});
  slot_constraints_.push_back(is_generator(generator_, 1));
  return generator_;
}

Formula Encoder::slot_constraints() const { return Formula::conj(slot_constraints_); }

Formula Encoder::is_O(int s) const { return Formula::eq(Z(s) - MPoly(1)); }
Formula Encoder::is_affine(int s) const { return Formula::eq(Z(s)); }

Formula Encoder::is_generator(int s, int sign) const {
  return Formula::conj({is_affine(s), Formula::eq(X(s) - V(T_)), Formula::eq(Y(s) - MPoly(sign))});
}

Formula Encoder::point_equal(int a, int b, int sign) const {
  return Formula::conj({Formula::eq(X(a) - X(b)), Formula::eq(Y(a) - MPoly(sign) * Y(b)), Formula::eq(Z(a) - Z(b))});
}

AddRecord Encoder::add_record(int a, int b, int c, const std::string& prefix) {
  AddRecord r{a, b, c, formula_.vars.add(prefix + ".lam"), formula_.vars.add(prefix + ".w")};
  return r;
}

Formula Encoder::add_formula(const AddRecord& r) const {
  const int a = r.a, b = r.b, c = r.c;
  const MPoly lam = V(r.lam), w = V(r.w);
  const MPoly y_c = Y(c) + Y(a) + lam * (X(c) - X(a));
  Formula chord = Formula::conj({
      is_affine(a), is_affine(b), is_affine(c),
      Formula::eq((X(b) - X(a)) * w - MPoly(1)),
      Formula::eq(lam * (X(b) - X(a)) - (Y(b) - Y(a))),
      Formula::eq(X(c) - (d_ * lam * lam - X(a) - X(b))),
      Formula::eq(y_c),
  });
  Formula tangent = Formula::conj({
      is_affine(a), is_affine(b), is_affine(c),
      Formula::eq(X(a) - X(b)),
      Formula::eq(Y(a) - Y(b)),
      Formula::eq(Y(a) * w - MPoly(1)),
      Formula::eq(MPoly(2) * d_ * Y(a) * lam - (MPoly(3) * X(a) * X(a) + MPoly(curve_.a))),
      Formula::eq(X(c) - (d_ * lam * lam - MPoly(2) * X(a))),
      Formula::eq(y_c),
  });
  return Formula::disj({
      Formula::conj({is_O(a), point_equal(c, b)}),
      Formula::conj({is_O(b), point_equal(c, a)}),
      Formula::conj({is_affine(a), is_affine(b), Formula::eq(X(a) - X(b)), Formula::eq(Y(a) + Y(b)), is_O(c)}),
      std::move(chord),
      std::move(tangent),
  });
}

Formula Encoder::encode_addition(int a, int b, int c) {
  adds_.push_back(add_record(a, b, c, fresh_prefix("add")));
  return add_formula(adds_.back());
}

Formula Encoder::encode_S_membership(int p) {
  const int g = generator_slot();
  const std::string name = slot_at(p).name;
  MembershipRecord r;
  r.p = p;
  r.w = slot(name + ".W", {SlotRule::Kind::half_of, p, 1});
  r.q = slot(name + ".Q", {SlotRule::Kind::double_of, r.w, 1});
  r.dbl = add_record(r.w, r.w, r.q, name + ".dbl");
  r.inc = add_record(r.q, g, p, name + ".inc");
  memberships_.push_back(r);
  return Formula::disj({
      is_O(p),
      is_generator(p, 1),
      Formula::conj({is_affine(r.w), add_formula(r.dbl),
                     Formula::disj({point_equal(p, r.q), add_formula(r.inc)})}),
  });
}

int Encoder::encode_scaled(int base, const BigInt& k, const std::string& name, std::vector<Formula>& out) {
  const int b = base < 0 ? generator_slot() : base;
  const int result = slot(name, {SlotRule::Kind::multiple, base, k});
  if (k == 0) {
    out.push_back(is_O(result));
    return result;
  }
  const BigInt mag = abs(k);
  const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  int acc = b;
  BigInt acc_k = 1;
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc_k *= 2;
    const int dbl = slot(fresh_prefix("_c"), {SlotRule::Kind::multiple, base, acc_k});
    out.push_back(encode_addition(acc, acc, dbl));
    acc = dbl;
    if (mpz_tstbit(mag.get_mpz_t(), i)) {
      acc_k += 1;
      const int inc = slot(fresh_prefix("_c"), {SlotRule::Kind::multiple, base, acc_k});
      out.push_back(encode_addition(acc, b, inc));
      acc = inc;
    }
  }
  out.push_back(point_equal(result, acc, k > 0 ? 1 : -1));
  return result;
}

U0Vars Encoder::u0_vars(const std::string& prefix) {
  U0Vars u;
  auto& vars = formula_.vars;
  u.c = vars.add(prefix);
  u.x = vars.add(prefix + ".x");
  u.y = vars.add(prefix + ".y");
  u.xp = vars.add(prefix + ".xp");
  u.yp = vars.add(prefix + ".yp");
  u.s = vars.add(prefix + ".s");
  return u;
}

// c = (x/y)(y'/x') with (x, y), (x', y') on y^2 = x^3 + x + 1.
Formula Encoder::u0_membership(const U0Vars& u) const {
  auto on_e0 = [&](int x, int y) { return Formula::eq(V(y) * V(y) - V(x).pow(3) - V(x) - MPoly(1)); };
  return Formula::conj({
      on_e0(u.x, u.y),
      on_e0(u.xp, u.yp),
      Formula::eq(V(u.c) * V(u.y) * V(u.xp) - V(u.x) * V(u.yp)),
      Formula::eq(V(u.y) * V(u.xp) * V(u.s) - MPoly(1)),
  });
}

std::vector<Formula> Encoder::gate_leaves(int f, int tinv, const std::string& prefix) {
  const MPoly t = V(tinv), a = V(a_), pi = V(pi_), fv = V(f);
  std::vector<Formula> out;
  for (int form : {1, 2}) {
    const MPoly last = form == 1 ? -fv : -(a * fv);
    const std::vector<MPoly> base = {t, -(a * t), MPoly(-1), last};
    GateLeaf g;
    g.form = form;
    g.f_var = f;
    g.pairing = MPoly(-1);
    int i = 0;
    for (const auto& e : base)
      for (const MPoly& scale : {MPoly(1), pi}) {
        ++i;
        const std::string tag = prefix + ".q" + std::to_string(form) + "." + std::to_string(i);
        const int x = formula_.vars.add(tag + ".x"), z = formula_.vars.add(tag + ".z");
        g.xs.push_back(x);
        g.zs.push_back(z);
        g.isotropy += e * scale * V(x) * V(x);
        g.pairing += V(x) * V(z);
      }
    out.push_back(Formula::gate_leaf(std::move(g)));
  }
  return out;
}

Formula Encoder::encode_multiplication(int a, int b, int c) {
  const std::string p = fresh_prefix("mul");
  auto& vars = formula_.vars;
  MulRecord r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.psi_a = vars.add(p + ".psiA");
  r.psi_b = vars.add(p + ".psiB");
  r.psi_c = vars.add(p + ".psiC");
  r.tinv = vars.add(p + ".tinv");
  r.guard_a = vars.add(p + ".gA");
  r.guard_b = vars.add(p + ".gB");
  r.guard_c = vars.add(p + ".gC");
  r.u = vars.add(p + ".u");
  r.v = vars.add(p + ".v");
  r.c3 = u0_vars(p + ".c3");
  r.c5 = u0_vars(p + ".c5");
  r.fu = vars.add(p + ".fu");
  r.fv = vars.add(p + ".fv");
  muls_.push_back(r);

  const MPoly T = V(T_), t = V(r.tinv);
  auto guard = [&](int s, int g) { return Formula::eq((X(s) - T) * V(g) - MPoly(1)); };
  auto psi = [&](int s, int v) { return Formula::eq(V(v) * T * Y(s) - X(s)); };
  const MPoly base = V(r.psi_a) * V(r.psi_b) - V(r.psi_c);
  const MPoly one_t3 = (MPoly(1) + t).pow(3);
  auto f_def = [&](int f, int g) {
    return Formula::eq(V(f) - (one_t3 * V(g) + V(r.c3.c) * t.pow(3) + V(r.c5.c) * t.pow(5)));
  };
  std::vector<Formula> gu = gate_leaves(r.fu, r.tinv, p + ".u");
  std::vector<Formula> gv = gate_leaves(r.fv, r.tinv, p + ".v");
  Formula general = Formula::conj({
      is_affine(a), is_affine(b), is_affine(c),
      guard(a, r.guard_a), guard(b, r.guard_b), guard(c, r.guard_c),
      psi(a, r.psi_a), psi(b, r.psi_b), psi(c, r.psi_c),
      Formula::eq(t * T - MPoly(1)),
      Formula::eq(V(r.u) - base - MPoly(BigRational(1, 2)) * t),
      Formula::eq(V(r.v) - base - MPoly(BigRational(1, 3)) * t),
      u0_membership(r.c3), u0_membership(r.c5),
      f_def(r.fu, r.u), f_def(r.fv, r.v),
      Formula::disj({Formula::conj(std::move(gu)), Formula::conj(std::move(gv))}),
  });
  return Formula::disj({
      Formula::conj({is_O(a), is_O(c)}),
      Formula::conj({is_O(b), is_O(c)}),
      Formula::conj({is_generator(a, 1), point_equal(c, b)}),
      Formula::conj({is_generator(a, -1), point_equal(c, b, -1)}),
      Formula::conj({is_generator(b, 1), point_equal(c, a)}),
      Formula::conj({is_generator(b, -1), point_equal(c, a, -1)}),
      std::move(general),
  });
}

namespace {

void add_aux(const TwistedCurve& curve, const CurvePoint& A, const CurvePoint& B, RationalFunction& lam,
             RationalFunction& w) {
  lam = w = RationalFunction();
  if (A.infinity || B.infinity) return;
  const RationalFunction d(curve.d);
  if (A.X != B.X) {
    w = (B.X - A.X).inverse();
    lam = (B.Y - A.Y) * w;
  } else if (A.Y == B.Y && !A.Y.is_zero()) {
    w = A.Y.inverse();
    lam = (RationalFunction(3) * A.X * A.X + RationalFunction(curve.a)) / (RationalFunction(2) * d * A.Y);
  }
}

} // namespace

Assignment Encoder::witness(const SlotValues& values) const {
  const std::size_t n = slots_.size();
  std::vector<std::optional<BigInt>> idx(n);
  std::vector<std::optional<CurvePoint>> pts(n);
  for (std::size_t s = 0; s < n; ++s) {
    const int id = static_cast<int>(s);
    if (auto it = values.points.find(id); it != values.points.end()) {
      pts[s] = it->second;
      continue;
    }
    if (auto it = values.multiples.find(id); it != values.multiples.end()) {
      idx[s] = it->second;
      continue;
    }
    const SlotRule& r = rules_[s];
    switch (r.kind) {
      case SlotRule::Kind::free: break;
      case SlotRule::Kind::multiple:
        if (r.ref < 0) idx[s] = r.k;
        else if (idx[static_cast<std::size_t>(r.ref)]) idx[s] = r.k * *idx[static_cast<std::size_t>(r.ref)];
        break;
      case SlotRule::Kind::half_of:
        if (auto it = values.halves.find(r.ref); it != values.halves.end()) {
          idx[s] = it->second;
        } else if (const auto& m = idx[static_cast<std::size_t>(r.ref)]) {
          if (*m == 0 || *m == 1) idx[s] = 0;
          else {
            BigInt h = *m - (mpz_odd_p(m->get_mpz_t()) ? 1 : 0);
            mpz_divexact_ui(h.get_mpz_t(), h.get_mpz_t(), 2);
            idx[s] = h;
          }
        }
        break;
      case SlotRule::Kind::double_of:
        if (idx[static_cast<std::size_t>(r.ref)]) idx[s] = 2 * *idx[static_cast<std::size_t>(r.ref)];
        break;
    }
  }

  long bound = curve_.max_multiple;
  for (const auto& i : idx)
    if (i) bound = std::max(bound, to_long(abs(*i)));
  TwistedCurve big = curve_;
  big.max_multiple = static_cast<int>(bound);
  const MultiplesTable table(big);
  for (std::size_t s = 0; s < n; ++s)
    if (idx[s] && !pts[s]) pts[s] = *idx[s] == 0 ? CurvePoint::O() : table.point(to_long(*idx[s]));

  Assignment out = base_assignment(formula_.vars);
  auto set = [&](int var, RationalFunction v) { out[static_cast<std::size_t>(var)] = std::move(v); };
  for (std::size_t s = 0; s < n; ++s) {
    if (!pts[s]) continue;
    const Slot& sl = slots_[s];
    set(sl.X, pts[s]->infinity ? RationalFunction() : pts[s]->X);
    set(sl.Y, pts[s]->infinity ? RationalFunction() : pts[s]->Y);
    set(sl.Z, RationalFunction(pts[s]->infinity ? 1 : 0));
  }
  auto fill_add = [&](const AddRecord& r) {
    const auto &A = pts[static_cast<std::size_t>(r.a)], &B = pts[static_cast<std::size_t>(r.b)];
    if (!A || !B) return;
    RationalFunction lam, w;
    add_aux(curve_, *A, *B, lam, w);
    set(r.lam, lam);
    set(r.w, w);
  };
  for (const auto& r : adds_) fill_add(r);
  for (const auto& m : memberships_) {
    fill_add(m.dbl);
    fill_add(m.inc);
  }

  const std::vector<RationalPoint> e0 = e0_multiples(12);
  const RationalFunction T = RationalFunction::T(), t = T.inverse();
  auto fill_u0 = [&](const U0Vars& u, const BigRational& c) {
    const auto it = std::find(sample_.values.begin(), sample_.values.end(), c);
    if (it == sample_.values.end()) return false;
    const auto [j, k] = sample_.witnesses[static_cast<std::size_t>(it - sample_.values.begin())];
    const RationalPoint &P = e0[static_cast<std::size_t>(j - 1)], &Q = e0[static_cast<std::size_t>(k - 1)];
    set(u.c, RationalFunction(c));
    set(u.x, RationalFunction(P.x));
    set(u.y, RationalFunction(P.y));
    set(u.xp, RationalFunction(Q.x));
    set(u.yp, RationalFunction(Q.y));
    set(u.s, RationalFunction(1 / (P.y * Q.x)));
    return true;
  };
  for (const auto& r : muls_) {
    const auto &pa = pts[static_cast<std::size_t>(r.a)], &pb = pts[static_cast<std::size_t>(r.b)],
               &pc = pts[static_cast<std::size_t>(r.c)];
    if (!pa || !pb || !pc) continue;
    // Guards are set whenever the points are known, so that a general-branch
    // attempt on an index in {0, 1, -1} fails visibly rather than staying open.
    set(r.tinv, t);
    auto guard = [&](int var, const CurvePoint& P) {
      if (!P.infinity) set(var, P.X == T ? RationalFunction() : (P.X - T).inverse());
    };
    guard(r.guard_a, *pa);
    guard(r.guard_b, *pb);
    guard(r.guard_c, *pc);
    const auto &ia = idx[static_cast<std::size_t>(r.a)], &ib = idx[static_cast<std::size_t>(r.b)],
               &ic = idx[static_cast<std::size_t>(r.c)];
    if (!ia || !ib || !ic) continue;
    auto small = [](const BigInt& z) { return abs(z) <= 1; };
    if (small(*ia) || small(*ib) || small(*ic)) continue;
    const long nn = to_long(*ia), mm = to_long(*ib), rr = to_long(*ic);
    set(r.psi_a, table.psi(nn));
    set(r.psi_b, table.psi(mm));
    set(r.psi_c, table.psi(rr));
    const UVPair uvp = uv(table, nn, mm, rr);
    set(r.u, uvp.u);
    set(r.v, uvp.v);
    std::optional<CandidatePair> choice = values.gate_choice;
    if (!choice) choice = gate_for_indices(table, nn, mm, rr, formula_.h, candidates_).witness;
    if (!choice) continue;
    const auto& [c3, c5] = *choice;
    if (!fill_u0(r.c3, c3) || !fill_u0(r.c5, c5)) continue;
    const RationalFunction one_t3 = (RationalFunction(1) + t).pow(3);
    const RationalFunction tail = RationalFunction(c3) * t.pow(3) + RationalFunction(c5) * t.pow(5);
    set(r.fu, one_t3 * uvp.u + tail);
    set(r.fv, one_t3 * uvp.v + tail);
  }
  return out;
}

} // namespace h10
