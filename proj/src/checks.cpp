#include <Eigen/Dense>

#include <cmath>

#include "chaingeo/beta.hpp"
#include "chaingeo/error.hpp"
#include "chaingeo/intersection.hpp"
#include "chaingeo/verify.hpp"

namespace chaingeo {

namespace {

using Skip = std::optional<std::string>;

Sampler sampler(const TrialContext& ctx) { return Sampler(ctx.space, ctx.trial_seed, ctx.height); }

std::size_t pick(Sampler& smp, std::size_t lo, std::size_t hi) { return lo + smp.rng().below(hi - lo + 1); }

std::size_t pick_k(Sampler& smp, bool below_m = false) {
  const HermSpace& s = smp.space();
  return pick(smp, min_vertical_index(s), below_m ? s.m - 1 : s.m);
}

/// Zero iff every column of `vecs` lies in the nondegenerate subspace v.
Matrix residual(const Subspace& v, const Matrix& vecs) {
  return orth_complement(v).basis().adjoint() * v.space().apply_h(vecs);
}

/// [F; 0; 0].
Matrix top_block(const HermSpace& s, const Matrix& f) {
  Matrix out(s.dim(), s.m);
  out.set_block(0, 0, f);
  return out;
}

/// A chart point of t, resampling the frame parameter.
ShilovPoint chart_point_of(Sampler& smp, const MChain& t) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ShilovPoint x = t.point(smp.anti_hermitian(t.space().m, 3));
    if (transverse(x, v_inf(t.space()))) return x;
  }
  fail(ErrorKind::NotTransverseToVinf, "no chart point found on chain");
}

ShilovPoint domain_point(Sampler& smp, const BetaFrame& f) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ShilovPoint w = smp.point();
    if (in_domain(f, w)) return w;
  }
  fail(ErrorKind::NotInDomain, "no domain point found");
}

/// Inverse of a random completion of the basis z to C^m; maps span(z) to Z_k.
Matrix completion(Sampler& smp, const Matrix& z) {
  const std::size_t m = z.rows();
  for (;;) {
    Matrix p = hstack(z, smp.matrix(m, m - z.cols(), 3));
    if (rank(p) == m) return p;
  }
}

Skip needs_beta_regime(const HermSpace& s) {
  if (s.n < 2 * s.m) return std::nullopt;
  return "needs n < 2m (k = 2m - n >= 1)";
}

Skip needs_horizontal(const HermSpace& s) {
  if (s.n > s.m) return std::nullopt;
  return "needs n > m";
}

Skip needs_rank_one(const HermSpace& s) {
  if (s.m == 1) return std::nullopt;
  return "needs m = 1";
}

TrialResult check_vc(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const WPoint w{smp.matrix(s.mid(), s.m)};
  const Subspace v = w_to_subspace(s, w);
  r.expect(v.dim() == 2 * s.m, "dimension 2m", [&] { return Json(to_json(v)); });
  r.expect(v.contains(v_inf(s).subspace()), "contains v_inf", [&] { return Json(to_json(v)); });
  r.expect(hermitian_signature(restrict_form(v)) == Signature{s.m, s.m, 0}, "signature (m,m)", [&] { return Json(to_json(v)); });
  r.expect(subspace_to_w(v) == w, "roundtrip A -> V -> A", [&] { return Json(to_json(w)); });
  r.expect(intersection_index(v_inf(s), MChain(v)) == s.m, "vertical", [&] { return Json(to_json(v)); });
  // The other direction: a chain through v_inf and a chart point.
  const ShilovPoint x = smp.point();
  const MChain t = chain_through(v_inf(s), x);
  const WPoint p = subspace_to_w(t.subspace());
  r.expect(p == project(to_chart(x)), "coordinate of T_{v_inf,x} is pi(x)", [&] { return Json(to_json(x)); });
  r.expect(w_to_subspace(s, p) == t.subspace(), "roundtrip V -> A -> V", [&] { return Json(to_json(t)); });
  return r;
}

TrialResult check_vf(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const ShilovPoint x = smp.point();
  const HeisPoint p = to_chart(x);
  const MChain t = chain_through(x, v_inf(s));
  // Fiber contained in the chain.
  HeisPoint q = p;
  q.Y = smp.anti_hermitian(s.m);
  r.expect(member(from_chart(s, q), t), "fiber point on the vertical chain", [&] { return Json(to_json(q)); });
  // Chain points lie in the fiber.
  const ShilovPoint y = chart_point_of(smp, t);
  const HeisPoint py = to_chart(y);
  r.expect(project(py) == project(p), "chain point projects to pi(x)", [&] { return Json(to_json(y)); });
  // M acts simply transitively on the fiber.
  const auto f = central_translation(x.subspace(), y.subspace());
  r.expect(f.has_value() && *f == py.Y - p.Y, "central translation x -> y", [&] { return Json(to_json(y)); });
  if (f) r.expect(act_N(NElement::central(s, *f), p) == py, "chart action of the translation", [&] { return Json(to_json(*f)); });
  const USubspace stab = kernel_u(s.m, [&](const Matrix& g) { return residual(x.subspace(), top_block(s, g)); });
  r.expect(stab.dim() == 0, "M acts freely", [&] { return Json(to_json(stab)); });
  return r;
}

TrialResult check_ti(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  for (std::size_t k = min_vertical_index(s); k <= s.m; ++k) {
    const MChain t = smp.chain(k);
    r.expect(intersection_index(v_inf(s), t) == k, "q T_k has index k", [&] { return Json({{"k", k}, {"chain", to_json(t)}}); });
  }
  const std::size_t k = pick_k(smp);
  const MChain t = smp.chain(k);
  const Matrix g = smp.h_unitary();
  const ShilovPoint gx = transformed(g, v_inf(s));
  r.expect(intersection_index(gx, t.transformed(g)) == k, "index invariant under G", [&] { return Json({{"k", k}, {"g", to_json(g)}, {"chain", to_json(t)}}); });
  const ShilovPoint x = smp.point(true);
  const std::size_t i = intersection_index(x, t);
  r.expect(intersection_index(transformed(g, x), t.transformed(g)) == i, "index invariant at a random point", [&] { return Json({{"point", to_json(x)}, {"chain", to_json(t)}}); });
  return r;
}

TrialResult check_tk(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t k = pick_k(smp);
  const MChain t = standard_chain(s, k);
  const Matrix e = smp.matrix(s.m - k, k), u = smp.unitary(s.m - k), c = smp.anti_hermitian(k);
  const ShilovPoint x = parametrize_Tk(s, k, e, u, c);
  r.expect(member(x, t), "parametrized point lies on T_k", [&] { return Json({{"k", k}, {"point", to_json(x)}}); });
  Matrix proj(s.mid(), s.m);
  proj.set_block(0, 0, hstack(e, Matrix::identity(s.m - k) + u));
  r.expect(to_chart(x).X == proj, "projection [E, I+U; 0, 0]", [&] { return Json({{"k", k}, {"point", to_json(x)}}); });
  const TkParameters back = tk_parameters(x, k);
  r.expect(back.E == e && back.U == u && back.C == c, "parameters roundtrip", [&] { return Json({{"k", k}, {"point", to_json(x)}}); });
  // Every chart point of T_k has this form.
  const ShilovPoint y = chart_point_of(smp, t);
  const TkParameters py = tk_parameters(y, k);
  r.expect(is_unitary(py.U) && is_anti_hermitian(py.C), "chart point of T_k has unitary U", [&] { return Json({{"k", k}, {"point", to_json(y)}}); });
  r.expect(parametrize_Tk(s, k, py.E, py.U, py.C) == y, "chart point reconstructed", [&] { return Json({{"k", k}, {"point", to_json(y)}}); });
  return r;
}

TrialResult check_s0(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t k = pick_k(smp);
  const MChain t = standard_chain(s, k);
  const Matrix g = s0_element(s, k, smp.invertible(k, 3), smp.matrix(k, s.m - k, 3), smp.unitary(s.m - k),
                              smp.unitary(s.n + k - 2 * s.m));
  const auto data = [&] { return Json({{"k", k}, {"g", to_json(g)}}); };
  r.expect(g.adjoint() * s.h() * g == s.h(), "h-unitary", data);
  r.expect(transformed(g, v_inf(s)) == v_inf(s), "fixes v_inf", data);
  r.expect(transformed(g, v_zero(s)) == v_zero(s), "fixes v_0", data);
  r.expect(t.transformed(g) == t, "fixes T_k", data);
  if (k < s.m) {
    // converse: a random element of L moves T_k; stabilizing samples are resampled.
    bool moved = false;
    for (int attempt = 0; attempt < 8 && !moved; ++attempt) {
      moved = !(t.transformed(smp.l_element().matrix(s)) == t);
      if (!moved) r.count("resampled");
    }
    r.expect(moved, "converse: random L element moves T_k", {{"k", k}});
  }
  return r;
}

TrialResult check_s1(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t k = pick_k(smp, true);
  const MChain t = standard_chain(s, k);
  const Circle ck = project_chain(t);
  const Matrix f = smp.anti_hermitian(s.m);
  const Matrix s0 = s0_element(s, k, smp.invertible(k, 3), smp.matrix(k, s.m - k, 3), smp.unitary(s.m - k),
                               smp.unitary(s.n + k - 2 * s.m));
  const Matrix g = central_matrix(s, f) * s0;
  const auto data = [&] { return Json({{"k", k}, {"g", to_json(g)}}); };
  r.expect(transformed(g, v_inf(s)) == v_inf(s), "lies in Q", data);
  r.expect(project(to_chart(transformed(g, v_zero(s)))).A.is_zero(), "fixes o", data);
  r.expect(circle_equal(project_chain(t.transformed(g)), ck), "fixes C_k", data);
  // converse: N elements fixing o are central, and random L elements move C_k.
  const NElement n = smp.n_element();
  const bool fixes_o = act_N(n, HeisPoint{Matrix(s.mid(), s.m), Matrix(s.m, s.m)}).X.is_zero();
  r.expect(fixes_o == n.E.is_zero(), "converse: N element fixing o is central", [&] { return Json({{"E", to_json(n.E)}}); });
  bool moved = false;
  for (int attempt = 0; attempt < 8 && !moved; ++attempt) {
    moved = !circle_equal(project_chain(t.transformed(smp.l_element().matrix(s))), ck);
    if (!moved) r.count("resampled");
  }
  r.expect(moved, "converse: random L element moves C_k", {{"k", k}});
  return r;
}

TrialResult check_um(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const std::size_t l = ctx.space.m;
  const Matrix id = Matrix::identity(l);
  const Matrix c = smp.unitary(l);
  for (int j = 0; j < 200; ++j) {
    const Matrix x = smp.unitary(l);
    if (!in_id_plus_unitary(c * (id + x) * c.adjoint())) {
      r.expect(false, "A = C keeps Id + U(l)", [&] { return Json({{"C", to_json(c)}, {"X", to_json(x)}}); });
      break;
    }
  }
  Matrix a = smp.unitary(l);
  while (a == c) a = smp.unitary(l);
  int attempts = 0;
  bool found = false;
  while (!found && attempts < 50) {
    ++attempts;
    found = !in_id_plus_unitary(c * (id + smp.unitary(l)) * a.adjoint());
  }
  r.expect(found, "A != C has a witness within 50 samples", [&] { return Json({{"C", to_json(c)}, {"A", to_json(a)}}); });
  r.count("witness_attempts", attempts);
  return r;
}

TrialResult check_lift(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t k = pick_k(smp, true);
  const MChain t = smp.chain(k);
  const Circle c = project_chain(t);
  const auto data = [&] { return Json({{"k", k}, {"chain", to_json(t)}}); };
  r.expect(lift_circle(c, from_chart(s, c.marked)) == c.witness, "lift through the marked point", data);
  const ShilovPoint x = chart_point_of(smp, t);
  r.expect(lift_circle(c, x) == t, "lift through a point of T is T", data);
  r.expect(circle_equal(project_chain(lift_circle(c, x)), c), "lift projects onto the circle", data);
  // Central translates of T through x are exactly the M_T-translates, all equal to T.
  const USubspace through_x =
      kernel_u(s.m, [&](const Matrix& f) { return residual(t.subspace(), top_block(s, f)); });
  r.expect(through_x == chain_stabilizer_M(t), "translates through x are M_T", data);
  for (const Matrix& f : u_basis(s.m)) {
    const MChain moved = t.transformed(central_matrix(s, f));
    if (member(x, moved)) r.expect(moved == t, "unique lift among central translates", data);
  }
  const Matrix g = central_matrix(s, smp.anti_hermitian(s.m, 3));
  r.expect(lift_circle(c, transformed(g, x)) == t.transformed(g), "lift through a translated point", data);
  return r;
}

TrialResult check_err(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t k = pick_k(smp);
  const USubspace ek = USubspace::top_left(s.m, k);
  const QElement q = smp.q_element();
  const MChain t = standard_chain(s, k).transformed(q.matrix(s));
  const USubspace mt = chain_stabilizer_M(t);
  const auto data = [&] { return Json({{"k", k}, {"chain", to_json(t)}}); };
  r.expect(mt.dim() == k * k, "dim M_T = k^2", data);
  // (1) conjugation covariance
  r.expect(mt == ek.conjugated(q.l.A), "M_{qT_k} = A E_k A*", data);
  // (2) fiber over a chart point
  const ShilovPoint x = chart_point_of(smp, t);
  const USubspace fiber = kernel_u(s.m, [&](const Matrix& f) { return residual(t.subspace(), top_block(s, f)); });
  r.expect(fiber == mt, "fiber trace is M_T x", data);
  const Matrix f = smp.anti_hermitian(s.m);
  r.expect(member(transformed(central_matrix(s, f), x), t) == mt.contains(f), "fiber membership of (0,F) x", [&] { return Json({{"k", k}, {"F", to_json(f)}}); });
  // (3) N invariance
  const MChain nt = t.transformed(smp.n_element().matrix(s));
  r.expect(chain_stabilizer_M(nt) == mt, "M_{nT} = M_T", data);
  // (4) formula against solving
  r.expect(mt == chain_stabilizer_M_by_solving(t), "formula equals direct solve", data);
  for (const Matrix& b : mt.basis()) r.expect(t.transformed(central_matrix(s, b)) == t, "basis element fixes T", data);
  // independent of the normalizing a
  const Matrix z = vinf_trace(t.subspace());
  const USubspace a1 = ek.conjugated(completion(smp, z)), a2 = ek.conjugated(completion(smp, z));
  r.expect(a1 == mt && a2 == mt, "independent of a", data);
  return r;
}

TrialResult check_smap(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const std::size_t m = ctx.space.m;
  const std::size_t k = pick(smp, 0, m);
  const Matrix id = Matrix::identity(m);
  const Matrix zk = id.cols_range(0, k);
  r.expect(S_map(zk, zk) == USubspace::top_left(m, k), "S(Z_k, Z_k) = E_k", {{"k", k}});
  r.expect(S_map(id, id) == USubspace::full(m), "S(C^m, C^m) = u(m)");
  r.expect(S_map(Matrix(m, 0), smp.linear_subspace(m, k)).dim() == 0, "S(0, Z) = 0");
  const Matrix g = smp.invertible(m, 3);
  r.expect(S_map(g * zk, g * zk) == USubspace::top_left(m, k).conjugated(g), "S(gZ, gZ) = g S(Z, Z) g*", [&] { return Json({{"k", k}, {"g", to_json(g)}}); });
  const std::size_t k2 = pick(smp, 0, m);
  const Matrix z1 = smp.linear_subspace(m, k), z2 = smp.linear_subspace(m, k2);
  r.expect(S_map(z1 * smp.invertible(k, 3), z2 * smp.invertible(k2, 3)) == S_map(z1, z2),
           "independent of the bases", [&] { return Json({{"Z1", to_json(z1)}, {"Z2", to_json(z2)}}); });
  return r;
}

TrialResult check_beta(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const BetaFrame f(ctx.space, smp.signs(ctx.space.m));
  const ShilovPoint w = domain_point(smp, f);
  const auto [b0, bd] = beta(f, w);
  const auto data = [&] { return Json({{"signs", f.signs}, {"w", to_json(w)}}); };
  r.expect(b0.cols() == f.k() && bd.cols() == f.k(), "both components have dimension k", data);
  r.expect(intersection_index(v_inf(f.space), chain_through(f.v0(), w)) == f.k(), "T_{v0,w} is k-vertical", data);
  const USubspace err = error_space(f, w), info = info_space(f, w);
  r.expect(info.orthogonal_to(err), "I(w) orthogonal to E(w)", data);
  const Matrix a0 = w_chart_coordinates(f, WBase::V0, chain_through(f.v0(), w).subspace());
  const Matrix a1 = w_chart_coordinates(f, WBase::Vd, chain_through(f.vd(), w).subspace());
  r.expect(rank(a0) == f.l() && rank(a1) == f.l(), "W coordinates have maximal rank", data);
  r.expect(b0 == column_space(kernel(a0)) && bd == column_space(f.d() * kernel(a1)), "beta through the W charts",
           data);
  const USubspace ek = USubspace::top_left(f.space.m, f.k());
  r.expect(err == ek.conjugated(completion(smp, b0)) + ek.conjugated(completion(smp, bd)), "E(w) via g_i", data);
  return r;
}

TrialResult check_c45(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const BetaFrame f(s, smp.signs(s.m));
  const std::size_t l = f.l();
  const Matrix id = Matrix::identity(l);
  auto eq1 = [&](const Matrix& a0, const Matrix& a1) {
    return ((a0 * a1.adjoint() - id) * (a1 * a0.adjoint() - id) - id).is_zero();
  };
  // Pairs coming from domain points, through the exact preimage construction.
  const Matrix v0 = smp.linear_subspace(s.m, f.k()), v1 = smp.linear_subspace(s.m, f.k());
  const ShilovPoint w = beta_preimage(f, v0, v1, ctx.trial_seed);
  const Matrix a0 = w_chart_coordinates(f, WBase::V0, chain_through(f.v0(), w).subspace());
  const Matrix a1 = w_chart_coordinates(f, WBase::Vd, chain_through(f.vd(), w).subspace());
  r.expect(pair_in_image(a0, a1), "constructed pair is in the image", [&] { return Json({{"A0", to_json(a0)}, {"A1", to_json(a1)}}); });
  r.expect(eq1(a0, a1), "constructed pair solves the quadratic equation", [&] { return Json({{"A0", to_json(a0)}, {"A1", to_json(a1)}}); });
  // Random pairs, and pairs built to solve the equation.
  const Matrix r0 = smp.matrix(l, s.m), r1 = smp.matrix(l, s.m);
  const bool in = pair_in_image(r0, r1);
  r.expect(in == (rank(r0) == l && rank(r1) == l && eq1(r0, r1)), "unitarity test matches the equation", [&] { return Json({{"A0", to_json(r0)}, {"A1", to_json(r1)}}); });
  if (in) r.count("random_in_image");
  Matrix b0 = smp.matrix(l, s.m);
  while (rank(b0) < l) b0 = smp.matrix(l, s.m);
  const Matrix b1 = (id + smp.unitary(l)) * inverse(b0 * b0.adjoint()) * b0;
  r.expect(pair_in_image(b0, b1) && eq1(b0, b1), "built pair is in the image", [&] { return Json({{"A0", to_json(b0)}}); });
  // Both directions of the geometric statement: the two chains share a
  // maximal isotropic subspace iff (V0 cap V1)^perp is negative definite.
  for (const auto& [p0, p1] : {std::pair{b0, b1}, std::pair{r0, r1}}) {
    const Subspace meet = intersect(w_chart_at(f, WBase::V0, p0), w_chart_at(f, WBase::Vd, p1));
    const Signature sig = hermitian_signature(restrict_form(orth_complement(meet)));
    const bool definite = sig.plus == 0 && sig.minus == l && sig.zero == orth_complement(meet).dim() - l;
    r.expect(definite == pair_in_image(p0, p1), "shared isotropic subspace iff in image", [&] { return Json({{"A0", to_json(p0)}, {"A1", to_json(p1)}}); });
  }
  return r;
}

TrialResult check_surj(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const BetaFrame f(ctx.space, smp.signs(ctx.space.m));
  const std::size_t m = ctx.space.m;
  const Matrix v0 = smp.linear_subspace(m, f.k());
  const Matrix v1 = ctx.trial % 4 == 0 ? v0 : smp.linear_subspace(m, f.k());
  const auto data = [&] { return Json({{"signs", f.signs}, {"V0", to_json(v0)}, {"V1", to_json(v1)}}); };
  const ShilovPoint w = beta_preimage(f, v0, v1, ctx.trial_seed);
  r.expect(in_domain(f, w), "preimage lies in the domain", data);
  const auto [b0, bd] = beta(f, w);
  r.expect(b0 == v0 && bd == v1, "beta(beta_preimage(V0, V1)) = (V0, V1)", data);
  r.count("exact");
  r.count("approximate", 0);
  return r;
}

TrialResult check_span(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const std::size_t m = ctx.space.m;
  const BetaFrame f(ctx.space, smp.signs(m));
  USubspace acc(m);
  std::size_t samples = 0;
  while (acc.dim() < m * m && samples < 50 * m * m) {
    acc = acc + info_space(f, domain_point(smp, f));
    ++samples;
  }
  r.expect(acc.dim() == m * m, "I(w) spans u(m) within 50 m^2 samples", {{"dim", acc.dim()}, {"signs", f.signs}});
  r.count("samples", static_cast<long>(samples));
  if (acc.dim() == m * m && samples <= 10 * m * m) r.count("within_10m2");
  return r;
}

TrialResult check_oo(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t l = generic_intersection_length(s);
  // Degenerate configurations (a point not transverse to z) are resampled.
  const ShilovPoint z = smp.point();
  std::vector<ShilovPoint> xs;
  while (xs.size() < l) {
    ShilovPoint x = smp.point();
    if (transverse(z, x)) xs.push_back(x);
    else r.count("resampled");
  }
  const auto dims = generic_intersection_dims(z, xs);
  const auto expected = expected_intersection_dims(s, l);
  r.count(dims == expected ? "sequence_match" : "sequence_mismatch");
  auto pts = [&] {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
  };
  r.expect(dims == expected, "dimension sequence", [&] { return Json({{"dims", dims}, {"z", to_json(z)}, {"xs", pts()}}); });
  if (dims.back() == s.m) {
    r.count("terminated");
    std::vector<MChain> ts;
    for (const auto& x : xs) ts.push_back(chain_through(z, x));
    const bool recovered = intersect_chains(ts) == z;
    if (recovered) r.count("recovered");
    r.expect(recovered, "intersection recovers z", [&] { return Json({{"z", to_json(z)}, {"xs", pts()}}); });
  }
  return r;
}

TrialResult check_ic(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const std::size_t l = generic_intersection_length(s);
  const ShilovPoint z = smp.point();
  std::vector<MChain> ts;
  while (ts.size() < l) {
    ShilovPoint x = smp.point();
    if (transverse(z, x)) ts.push_back(chain_through(z, x));
  }
  try {
    r.expect(intersect_chains(ts) == z, "common point is z", [&] { return Json({{"z", to_json(z)}}); });
  } catch (const GeometryError& e) {
    r.expect(false, "chains through z have a common point", [&] { return Json({{"z", to_json(z)}, {"what", e.what()}}); });
  }
  // Replace one chain by a chain missing z.
  const MChain other = chain_through(smp.point(), smp.point());
  if (member(z, other)) {
    r.count("resampled");
    return r;
  }
  ts.back() = other;
  bool rejected = false;
  try {
    intersect_chains(ts);
  } catch (const GeometryError& e) {
    rejected = e.kind() == ErrorKind::NoCommonPoint;
  }
  r.expect(rejected, "chains without a common point are rejected", [&] { return Json({{"z", to_json(z)}, {"other", to_json(other)}}); });
  return r;
}

TrialResult check_berg(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const HermSpace& s = ctx.space;
  const long m = static_cast<long>(s.m);
  auto [x, y, z] = ctx.trial % 2 ? smp.maximal_triple() : smp.coplanar_triple();
  const auto data = [&] { return Json({{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}}); };
  const long v = bergmann_index(x, y, z);
  r.expect(std::abs(v) <= m && std::abs(v) % 2 == m % 2, "value in [-m, m] with the parity of m", data);
  if (ctx.trial % 2) r.expect(std::abs(v) == m, "maximal triple is extremal", data);
  r.expect(bergmann_index(y, x, z) == -v && bergmann_index(x, z, y) == -v && bergmann_index(z, y, x) == -v,
           "alternating under transpositions", data);
  r.expect(bergmann_index(y, z, x) == v, "invariant under cyclic shift", data);
  const Matrix g = smp.h_unitary();
  r.expect(bergmann_index(transformed(g, x), transformed(g, y), transformed(g, z)) == v, "G-invariant", data);
  const auto p = smp.coplanar_points(4);
  const long c = bergmann_index(p[1], p[2], p[3]) - bergmann_index(p[0], p[2], p[3]) +
                 bergmann_index(p[0], p[1], p[3]) - bergmann_index(p[0], p[1], p[2]);
  r.expect(c == 0, "cocycle identity", [&] {
    Json quad = Json::array();
    for (const auto& q : p) quad.push_back(to_json(q));
    return quad;
  });
  const std::vector<int> signs = smp.signs(s.m);
  long sum = 0;
  for (int e : signs) sum += e;
  r.expect(bergmann_index(v_inf(s), v_d(s, signs), v_zero(s)) == sum, "index of (v_inf, v_d, v_0) is the sign sum",
           {{"signs", signs}});
  return r;
}

TrialResult check_car(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  ShilovPoint x, y, z;
  if (ctx.trial % 2) {
    std::tie(x, y, z) = smp.maximal_triple();
  } else {
    do {
      x = smp.point();
      y = smp.point();
      z = smp.point();
    } while (!transverse(x, y) || !transverse(y, z) || !transverse(z, x));
  }
  bool maximal = is_maximal_triple_space(x, y, z);
  if (maximal) maximal = std::abs(bergmann_index(x, y, z)) == 1;
  const double c = cartan_invariant(x, y, z);
  const bool extremal = std::abs(std::abs(c) - 1.0) <= 1e-9;
  r.expect(extremal == maximal, "|c| = 1 iff maximal", [&] { return Json({{"cartan", c}, {"maximal", maximal}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}}); });
  r.count(maximal ? "maximal" : "generic");
  return r;
}

TrialResult check_xsig(const TrialContext& ctx) {
  TrialResult r;
  Sampler smp = sampler(ctx);
  const std::size_t n = 2 + ctx.trial % 7;
  const std::size_t k = pick(smp, 1, n);
  const Matrix b = smp.matrix(k, n, 5);
  std::vector<GaussianRational> d;
  for (int e : smp.signs(k)) d.emplace_back(e);
  const Matrix a = b.adjoint() * Matrix::diagonal(d) * b;
  Eigen::MatrixXcd fa(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fa(i, j) = a(i, j).to_complex();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(fa, Eigen::EigenvaluesOnly);
  const double tol = 1e-8 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Signature fl;
  for (double ev : es.eigenvalues()) (ev > tol ? fl.plus : ev < -tol ? fl.minus : fl.zero) += 1;
  const Signature ex = hermitian_signature(a);
  r.expect(ex == fl, "exact and float signatures agree", [&] { return Json({{"matrix", to_json(a)},
            {"exact", {ex.plus, ex.minus, ex.zero}},
            {"float", {fl.plus, fl.minus, fl.zero}}}); });
  return r;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"VC", "vertical chains through v_inf correspond to matrices", nullptr, check_vc},
      {"VF", "vertical fibers are chain traces with M simply transitive", nullptr, check_vf},
      {"TI", "intersection index is invariant and every k is realized", nullptr, check_ti},
      {"TK", "chart points of T_k and their projection", nullptr, check_tk},
      {"S0", "stabilizer of (v_inf, v_0, T_k)", nullptr, check_s0},
      {"S1", "stabilizer of (o, C_k) in Q", needs_horizontal, check_s1},
      {"UM", "C (Id + U) A* = Id + U forces A = C", nullptr, check_um},
      {"LIFT", "unique lifts of circles", needs_horizontal, check_lift},
      {"ERR", "central stabilizers of chains", nullptr, check_err},
      {"SMAP", "the S map on pairs of subspaces", nullptr, check_smap},
      {"BETA", "beta dimensions, E(w) and I(w)", needs_beta_regime, check_beta},
      {"C45", "image of the pair of projections", needs_beta_regime, check_c45},
      {"SURJ", "beta is surjective", needs_beta_regime, check_surj},
      {"SPAN", "I(w) spans u(m)", needs_beta_regime, check_span},
      {"OO", "generic intersections of chains through z", needs_horizontal, check_oo},
      {"IC", "recovering the common point of chains", needs_horizontal, check_ic},
      {"BERG", "Bergmann index identities", nullptr, check_berg},
      {"CAR", "Cartan invariant detects maximal triples", needs_rank_one, check_car},
      {"XSIG", "exact and floating-point signatures agree", nullptr, check_xsig},
  };
  return defs;
}

}  // namespace chaingeo
