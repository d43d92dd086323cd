use super::descriptor::SimpleGroupDescriptor;
use super::verdict::{Rule, Verdict, Witness};
use crate::arith::primary_decomposition;
use crate::error::Result;

fn positive(witness: Witness, reason: String) -> Verdict {
    Verdict {
        strongly_isotropic: true,
        rule: Rule::SimpleClassification,
        witness: Some(witness),
        reason,
    }
}

fn negative(condition: &str, reason: String) -> Verdict {
    Verdict {
        strongly_isotropic: false,
        rule: Rule::SimpleClassification,
        witness: Some(Witness::Violation {
            condition: condition.to_string(),
        }),
        reason,
    }
}

/// Decides strong isotropy of an absolutely simple group.
///
/// The strongly isotropic ones are `Sp_2n`, `Spin(q)` for ten-dimensional
/// `q` with trivial discriminant and split Clifford algebra, and
/// `SL_m(D)/mu_d` with `m > 1` where some prime divisor of `m` does not
/// divide `d`.
pub fn classify_simple(desc: &SimpleGroupDescriptor) -> Result<Verdict> {
    desc.validate()?;
    let name = desc.name();
    let verdict = match desc {
        SimpleGroupDescriptor::TypeAInner { m, d, .. } => {
            if *m <= 1 {
                negative(
                    "m > 1",
                    format!("{name}: the matrix size m = {m} must exceed 1"),
                )
            } else {
                let primes: Vec<u64> = primary_decomposition(*m).into_iter().map(|(p, _)| p).collect();
                match primes.iter().find(|&&p| d % p != 0) {
                    Some(&p) => positive(
                        Witness::Prime { p },
                        format!("{name}: the prime {p} divides m = {m} but not d = {d}"),
                    ),
                    None => negative(
                        "some prime divisor of m does not divide d",
                        format!("{name}: every prime divisor {primes:?} of m = {m} divides d = {d}"),
                    ),
                }
            }
        }
        SimpleGroupDescriptor::TypeAOuter => negative(
            "inner type",
            "groups of outer type A are never strongly isotropic".into(),
        ),
        SimpleGroupDescriptor::TypeC {
            algebra_split,
            adjoint,
            ..
        } => match (algebra_split, adjoint) {
            (true, false) => positive(Witness::SplitSymplectic, format!("{name} is split symplectic")),
            (_, true) => negative(
                "simply connected",
                format!("{name}: non-simply-connected type C groups admit anisotropic torsors"),
            ),
            (false, false) => negative(
                "split algebra",
                format!("{name}: symplectic groups of non-split algebras admit anisotropic torsors"),
            ),
        },
        SimpleGroupDescriptor::TypeD5 {
            simply_connected,
            disc_trivial,
            clifford_split,
        } => classify_d5(&name, *simply_connected, *disc_trivial, *clifford_split),
        SimpleGroupDescriptor::TypeD5Form {
            simply_connected,
            form,
        } => {
            let spin = form.spin_descriptor();
            classify_d5(&name, *simply_connected, spin.disc_trivial, spin.witt_trivial)
        }
        SimpleGroupDescriptor::Other { dynkin_label } => negative(
            "type A, C or D5",
            format!("type {dynkin_label}: only types A, C and D5 contain strongly isotropic groups"),
        ),
    };
    Ok(verdict)
}

fn classify_d5(name: &str, sc: bool, disc_trivial: bool, clifford_split: bool) -> Verdict {
    if !sc {
        return negative(
            "simply connected",
            format!("{name}: only the simply connected D5 can be strongly isotropic"),
        );
    }
    match (disc_trivial, clifford_split) {
        (true, true) => positive(
            Witness::SplitSpin,
            format!("{name}: trivial discriminant and split Clifford algebra"),
        ),
        (false, _) => negative("trivial discriminant", format!("{name}: nontrivial discriminant")),
        (true, false) => negative(
            "split Clifford algebra",
            format!("{name}: Clifford algebra is not split"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qform::RationalQuadraticForm;

    fn verdict(desc: SimpleGroupDescriptor) -> Verdict {
        classify_simple(&desc).unwrap()
    }

    #[test]
    fn symplectic() {
        assert!(verdict(SimpleGroupDescriptor::sp(3)).strongly_isotropic);
        let adj = SimpleGroupDescriptor::TypeC {
            n: 3,
            algebra_split: true,
            adjoint: true,
        };
        assert!(!verdict(adj).strongly_isotropic);
        let nonsplit = SimpleGroupDescriptor::TypeC {
            n: 3,
            algebra_split: false,
            adjoint: false,
        };
        assert!(!verdict(nonsplit).strongly_isotropic);
    }

    #[test]
    fn type_a() {
        assert!(!verdict(SimpleGroupDescriptor::sl_mod(4, 2)).strongly_isotropic);
        let v = verdict(SimpleGroupDescriptor::sl_mod(6, 2));
        assert!(v.strongly_isotropic);
        assert_eq!(v.witness, Some(Witness::Prime { p: 3 }));
        assert!(!verdict(SimpleGroupDescriptor::sl(1)).strongly_isotropic);
        assert!(verdict(SimpleGroupDescriptor::sl(2)).strongly_isotropic);
        // SL_2(D)/mu_2 with ind(D) = 3: the prime 2 divides d
        let g = SimpleGroupDescriptor::TypeAInner { m: 2, ind_d: 3, d: 2 };
        assert!(!verdict(g).strongly_isotropic);
        let g = SimpleGroupDescriptor::TypeAInner { m: 2, ind_d: 3, d: 3 };
        assert!(verdict(g).strongly_isotropic);
    }

    #[test]
    fn exceptional_and_outer() {
        assert!(!verdict(SimpleGroupDescriptor::other("E_8")).strongly_isotropic);
        assert!(!verdict(SimpleGroupDescriptor::TypeAOuter).strongly_isotropic);
    }

    #[test]
    fn d5_flags_and_forms() {
        let flags = |sc, disc, cl| SimpleGroupDescriptor::TypeD5 {
            simply_connected: sc,
            disc_trivial: disc,
            clifford_split: cl,
        };
        assert!(verdict(flags(true, true, true)).strongly_isotropic);
        assert!(!verdict(flags(false, true, true)).strongly_isotropic);
        assert!(!verdict(flags(true, false, true)).strongly_isotropic);
        assert!(!verdict(flags(true, true, false)).strongly_isotropic);

        let split = SimpleGroupDescriptor::TypeD5Form {
            simply_connected: true,
            form: RationalQuadraticForm::hyperbolic(5),
        };
        assert!(verdict(split).strongly_isotropic);
        let definite = SimpleGroupDescriptor::TypeD5Form {
            simply_connected: true,
            form: RationalQuadraticForm::from_integers(&[1; 10]).unwrap(),
        };
        assert!(!verdict(definite).strongly_isotropic);
        let short = SimpleGroupDescriptor::TypeD5Form {
            simply_connected: true,
            form: RationalQuadraticForm::hyperbolic(2),
        };
        assert!(classify_simple(&short).is_err());
    }

    #[test]
    fn antitone_in_d() {
        for m in 2..=30u64 {
            let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
            for &big in &divisors {
                if !verdict(SimpleGroupDescriptor::sl_mod(m, big)).strongly_isotropic {
                    continue;
                }
                for &small in divisors.iter().filter(|&&s| big % s == 0) {
                    assert!(verdict(SimpleGroupDescriptor::sl_mod(m, small)).strongly_isotropic);
                }
            }
        }
    }
}
