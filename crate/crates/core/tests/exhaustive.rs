//! Exhaustive sweeps over small monomial grids: the closed form against
//! the general engine, and generator membership of every image.

use reynolds_core::actions::{ActionSpec, Group};
use reynolds_core::invariants::{self, ExpressOutcome};
use reynolds_core::numutil::rat_int;
use reynolds_core::polyring::{Monomial, Polynomial, Variable};
use reynolds_core::reynolds;

/// All exponent vectors of total degree <= `max` over `vars`, built
/// position by position (independent of the library's enumerators).
fn all_monomials(vars: &[Variable], max: u32) -> Vec<Monomial> {
    fn go(
        vars: &[Variable],
        at: usize,
        left: u32,
        current: &mut Vec<(Variable, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if at == vars.len() {
            out.push(Monomial::from_pairs(current.iter().copied()));
            return;
        }
        for e in 0..=left {
            current.push((vars[at], e));
            go(vars, at + 1, left - e, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, 0, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn closed_form_agrees_with_general_engine_up_to_degree_eight() {
    let vars = [
        Variable::a(1),
        Variable::a(2),
        Variable::b(1),
        Variable::b(2),
    ];
    let mut checked = 0;
    for mu in all_monomials(&vars, 8) {
        let closed = reynolds::reynolds_sl2_closed(&mu).unwrap();
        let general = reynolds::reynolds_sl2(&Polynomial::term(rat_int(1), mu.clone())).unwrap();
        assert_eq!(closed, general, "disagreement at {mu}");
        checked += 1;
    }
    assert_eq!(checked, 495); // C(8 + 4, 4)
}

#[test]
fn every_small_image_lies_in_the_minor_algebra() {
    let spec = ActionSpec::standard(Group::Sl, 2, 4).unwrap();
    let gens = invariants::generators(&spec).unwrap();
    let vars: Vec<Variable> = (1..=4)
        .flat_map(|c| [Variable::a(c), Variable::b(c)])
        .collect();
    let mut nonzero = 0;
    for mu in all_monomials(&vars, 6) {
        let image = reynolds::reynolds_sl2(&Polynomial::term(rat_int(1), mu.clone())).unwrap();
        if image.is_zero() {
            continue;
        }
        nonzero += 1;
        match invariants::express_in_generators(&image, &gens, 6).unwrap() {
            ExpressOutcome::InSpan(expr) => {
                assert_eq!(expr.expand(&gens), image, "round trip at {mu}");
            }
            ExpressOutcome::NotInSpan => panic!("image of {mu} not in the minor algebra"),
        }
    }
    assert!(nonzero > 100, "sweep should hit many nonzero images");
}
