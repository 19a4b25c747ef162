#include "hf/doubling.hpp"

#include <memory>

namespace hf {

void validate_doubling_input(const DoublingInput& input) {
  if (!is_automorphism(input.group, input.theta))
    throw Error("doubling: theta is not a group automorphism");
  if (!is_order_two_or_id(input.group, input.theta))
    throw Error("doubling: theta is not of order two");
}

AlgebraMap dual_automorphism(const FiniteGroup& g, const GroupAutomorphism& theta) {
  if (!is_automorphism(g, theta) || !is_order_two_or_id(g, theta))
    throw Error("dual_automorphism: theta must be an order-two automorphism");
  auto fa = std::make_shared<const StarAlgebra>(function_algebra(g));
  SparseMatrix m(g.order, g.order);
  for (Elt x = 0; x < g.order; ++x) m.set(theta(x), x, Scalar(1));
  return {fa, fa, std::move(m)};
}

CrossedHopf build_crossed_hopf(const DoublingInput& input, CrossedVariant variant, bool verify) {
  validate_doubling_input(input);
  const FiniteGroup& g = input.group;
  const GroupAutomorphism& theta = input.theta;
  const Index n = g.order;

  CrossedHopf out;
  out.b.alg = crossed_product_z2(function_algebra(g), dual_automorphism(g, theta));
  const Index d = 2 * n;

  out.b.comult = SparseMatrix(d * d, d);
  for (Elt x = 0; x < n; ++x) {
    SparseVec plain(d * d), uu(d * d);
    for (Elt a = 0; a < n; ++a) {
      Elt b = g.mul(g.inv(a), x);  // ab = x
      plain.set(tensor_index(a, b, d), Scalar(1));
      uu.set(tensor_index(n + a, n + b, d), Scalar(1));
    }
    out.b.comult.set_column(x, std::move(plain));
    out.b.comult.set_column(n + x, std::move(uu));
  }

  out.b.counit = SparseVec(d);
  out.b.counit.set(g.identity, Scalar(1));
  if (variant != CrossedVariant::printed_counit)
    out.b.counit.set(n + g.identity, Scalar(1));  // eps(d_e U) = 1

  out.b.antipode = SparseMatrix(d, d);
  for (Elt x = 0; x < n; ++x) {
    out.b.antipode.set(g.inv(x), x, Scalar(1));
    Elt u_image = (variant == CrossedVariant::printed_antipode) ? g.inv(x) : theta(g.inv(x));
    out.b.antipode.set(n + u_image, n + x, Scalar(1));
  }

  out.left_inv = SparseVec(d);
  for (Elt x = 0; x < n; ++x) out.left_inv.set(x, Scalar(1));
  out.right_inv = out.left_inv;

  if (verify) {
    Report rep = verify_hopf_axioms(out.b);
    if (!rep.all_pass()) throw Error("build_crossed_hopf: axiom suite failed:\n" + rep.to_text());
  }
  return out;
}

Report verify_invariant_functional(const HopfAlgebra& h, const SparseVec& f, InvSide side) {
  Report rep;
  const Index d = h.dim();
  bool ok = true;
  std::string w;
  for (Index k = 0; k < d; ++k) {
    VecBuilder acc(d);
    for (const auto& [t, c] : h.comult.column(k).entries()) {
      auto [i, j] = tensor_split(t, d);
      if (side == InvSide::left) {
        // (id (x) f) Delta
        Scalar v = f.get(j);
        if (!v.is_zero()) acc.add(i, c * v);
      } else {
        Scalar v = f.get(i);
        if (!v.is_zero()) acc.add(j, c * v);
      }
    }
    SparseVec expected = h.alg.unit.scaled(dot(f, h.alg.basis(k)));
    if (acc.take() != expected) {
      ok = false;
      w = h.alg.labels[k];
      break;
    }
  }
  rep.add(side == InvSide::left ? "left_invariant" : "right_invariant", ok, w);
  return rep;
}

HopfAlgebra double_direct(const DoublingInput& input, bool verify) {
  validate_doubling_input(input);
  const FiniteGroup& g = input.group;
  const GroupAutomorphism& theta = input.theta;
  const Index n = g.order;
  const Index d = 2 * n;

  HopfAlgebra h;
  StarAlgebra ga = group_algebra(g);
  h.alg = direct_sum(ga, ga);
  for (Elt x = 0; x < n; ++x) {
    h.alg.labels[x] = "sigma:" + g.labels[x];
    h.alg.labels[n + x] = "tau:" + g.labels[x];
  }

  h.comult = SparseMatrix(d * d, d);
  for (Elt x = 0; x < n; ++x) {
    SparseVec xi(d * d), eta(d * d);
    xi.set(tensor_index(x, x, d), Scalar(1));
    xi.set(tensor_index(n + x, n + theta(x), d), Scalar(1));
    eta.set(tensor_index(x, n + x, d), Scalar(1));
    eta.set(tensor_index(n + x, theta(x), d), Scalar(1));
    h.comult.set_column(x, std::move(xi));
    h.comult.set_column(n + x, std::move(eta));
  }

  h.counit = SparseVec(d);
  for (Elt x = 0; x < n; ++x) h.counit.set(x, Scalar(1));

  h.antipode = SparseMatrix(d, d);
  for (Elt x = 0; x < n; ++x) {
    h.antipode.set(g.inv(x), x, Scalar(1));
    h.antipode.set(n + theta(g.inv(x)), n + x, Scalar(1));
  }

  if (verify) {
    Report rep = verify_hopf_axioms(h);
    if (!rep.all_pass()) throw Error("double_direct: axiom suite failed:\n" + rep.to_text());
  }
  return h;
}

Report verify_doubling_agreement(const DoublingInput& input, PairingConvention convention) {
  Report rep;
  CrossedHopf crossed = build_crossed_hopf(input, CrossedVariant::corrected, false);
  rep.add("crossed_axioms", verify_hopf_axioms(crossed.b).all_pass());
  rep.merge("h", verify_invariant_functional(crossed.b, crossed.left_inv, InvSide::left));
  rep.merge("h", verify_invariant_functional(crossed.b, crossed.right_inv, InvSide::right));

  HopfAlgebra direct = double_direct(input, false);
  rep.add("direct_axioms", verify_hopf_axioms(direct).all_pass());

  HopfAlgebra dual = dual_hopf(crossed.b);
  const Index n = input.group.order;
  std::vector<Index> perm(2 * n);
  for (Index x = 0; x < n; ++x) {
    perm[x] = x;
    perm[n + x] = (convention == PairingConvention::u_delta) ? n + x : n + input.theta(x);
  }
  auto mismatch = hopf_structure_mismatch(dual, direct, perm);
  rep.add("structure_constants_equal", !mismatch.has_value(), mismatch.value_or(""));
  return rep;
}

Report doubling_erratum_report(const DoublingInput& input) {
  Report rep;
  {
    Report suite = verify_hopf_axioms(build_crossed_hopf(input, CrossedVariant::corrected, false).b);
    rep.add("crossed_corrected_passes", suite.all_pass());
  }
  {
    Report suite =
        verify_hopf_axioms(build_crossed_hopf(input, CrossedVariant::printed_counit, false).b);
    const Check* cl = suite.find("counit_left");
    const Check* cr = suite.find("counit_right");
    bool detected = (cl && !cl->pass) || (cr && !cr->pass);
    std::string witness = cl && !cl->pass ? cl->witness : (cr ? cr->witness : "");
    rep.add("counit_printed_fails", detected,
            detected ? "" : "printed counit unexpectedly passes",
            detected ? "counit law fails at " + witness : "");
  }
  {
    Report suite =
        verify_hopf_axioms(build_crossed_hopf(input, CrossedVariant::printed_antipode, false).b);
    const Check* al = suite.find("antipode_left");
    const Check* ar = suite.find("antipode_right");
    bool detected = (al && !al->pass) || (ar && !ar->pass);
    std::string witness = al && !al->pass ? al->witness : (ar ? ar->witness : "");
    rep.add("antipode_printed_fails", detected,
            detected ? "" : "printed antipode unexpectedly passes",
            detected ? "antipode law fails at " + witness : "");
  }
  return rep;
}

}  // namespace hf
