use num_traits::One;

use subdivide_core::rational::{int, pow2, ratio};
use subdivide_core::schemes::{bspline_mask, combined_mask, dd_mask, factor_symbol, scheme_symbol};
use subdivide_core::{AlphaPoly, LaurentSymbol, Rational, SchemeSpec, UnitPoint};

fn sum(taps: &[AlphaPoly]) -> AlphaPoly {
    taps.iter().fold(AlphaPoly::zero(), |acc, t| &acc + t)
}

#[test]
fn rules_are_affine_for_every_alpha() {
    for n in 1..=4 {
        let m = combined_mask(n).unwrap();
        assert_eq!(sum(&m.vertex), AlphaPoly::one(), "n={n}");
        assert_eq!(sum(&m.edge), AlphaPoly::one(), "n={n}");
        let a = scheme_symbol(&SchemeSpec::symbolic(n).unwrap()).unwrap();
        assert_eq!(a.eval_z(UnitPoint::PlusOne), AlphaPoly::constant(int(2)));
        assert!(a.eval_z(UnitPoint::MinusOne).is_zero());
    }
}

#[test]
fn combined_is_blend_of_parents() {
    for n in 1..=4 {
        let m = combined_mask(n).unwrap();
        let dd = dd_mask(n).unwrap().to_symbolic();
        let bs = bspline_mask(n).unwrap().to_symbolic();
        let one_plus = AlphaPoly::linear(int(1), int(1));
        let alpha = AlphaPoly::alpha();
        let blend = |d: &[AlphaPoly], b: &[AlphaPoly]| -> Vec<AlphaPoly> {
            d.iter()
                .zip(b)
                .map(|(d, b)| &(&one_plus * d) - &(&alpha * b))
                .collect()
        };
        assert_eq!(m.vertex, blend(&dd.vertex, &bs.vertex), "n={n}");
        assert_eq!(m.edge, blend(&dd.edge, &bs.edge), "n={n}");
    }
}

#[test]
fn parents_at_special_alphas() {
    for n in 1..=4 {
        let spec = SchemeSpec::symbolic(n).unwrap();
        let a = scheme_symbol(&spec).unwrap();
        assert_eq!(
            a.specialize(&Rational::from(int(0))),
            dd_mask(n).unwrap().symbol()
        );
        assert_eq!(
            a.specialize(&-Rational::one()),
            bspline_mask(n).unwrap().symbol()
        );
    }
}

#[test]
fn symbols_are_palindromic() {
    for n in 1..=4 {
        let a = scheme_symbol(&SchemeSpec::symbolic(n).unwrap()).unwrap();
        let top = 4 * n as i64 + 2;
        for j in 0..=top {
            assert_eq!(a.coeff(j), a.coeff(top - j), "n={n} j={j}");
        }
    }
}

#[test]
fn factored_symbol_round_trips() {
    for n in 1..=4u32 {
        let spec = SchemeSpec::symbolic(n).unwrap();
        let big_a = factor_symbol(&spec).unwrap();
        assert_eq!(big_a.max_exponent(), Some(2 * n as i64));
        assert_eq!(big_a.eval_z(UnitPoint::PlusOne), AlphaPoly::one());
        let rebuilt = LaurentSymbol::one_plus_z_pow(2 * n as usize + 2).mul(&big_a);
        assert_eq!(
            rebuilt,
            scheme_symbol(&spec)
                .unwrap()
                .scale_rational(&pow2(2 * n + 1))
        );
    }
}

#[test]
fn published_rules() {
    assert_eq!(
        dd_mask(1).unwrap().edge,
        [ratio(-1, 16), ratio(9, 16), ratio(9, 16), ratio(-1, 16)]
    );
    let b = bspline_mask(1).unwrap();
    assert_eq!(b.vertex, [ratio(3, 16), ratio(10, 16), ratio(3, 16)]);
    assert_eq!(
        b.edge,
        [ratio(1, 32), ratio(15, 32), ratio(15, 32), ratio(1, 32)]
    );
    let c = combined_mask(1).unwrap();
    let lin = |a: Rational, b: Rational| AlphaPoly::linear(a, b);
    assert_eq!(
        c.vertex,
        [
            lin(int(0), ratio(-3, 16)),
            lin(int(1), ratio(3, 8)),
            lin(int(0), ratio(-3, 16))
        ]
    );
    assert_eq!(
        c.edge,
        [
            lin(ratio(-1, 16), ratio(-3, 32)),
            lin(ratio(9, 16), ratio(3, 32)),
            lin(ratio(9, 16), ratio(3, 32)),
            lin(ratio(-1, 16), ratio(-3, 32)),
        ]
    );
}
