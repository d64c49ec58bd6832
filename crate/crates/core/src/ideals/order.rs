use std::cmp::Ordering;

use crate::polyring::Monomial;
use crate::qarith::Rat;

/// Monomial orders used by the Gröbner engine. `Greater` means "larger".
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x0 > x1 > …`.
    #[default]
    Grevlex,
    Lex,
    /// Rational weights compared first, grevlex on ties.
    Weight(Vec<Rat>),
    /// Block order: grevlex on the first `eliminate` variables, then grevlex
    /// on the rest. Eliminates the first block.
    Elimination { eliminate: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Grevlex => grevlex(ea, eb),
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Weight(w) => a.weight(w).cmp(&b.weight(w)).then_with(|| grevlex(ea, eb)),
            MonomialOrder::Elimination { eliminate } => {
                let k = *eliminate;
                grevlex(&ea[..k], &eb[..k]).then_with(|| grevlex(&ea[k..], &eb[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Weight(w) => {
                let parts: Vec<String> = w.iter().map(|c| c.to_string()).collect();
                format!("weight({})", parts.join(","))
            }
            MonomialOrder::Elimination { eliminate } => format!("elim({eliminate})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x0*x2 < x1^2 in grevlex
        assert_eq!(o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[2, 0, 0]), &mono(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 0, 3]), &mono(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn weight_and_elimination() {
        let o = MonomialOrder::Weight(vec![rat(0), rat(0), rat(1)]);
        assert_eq!(o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Greater);
        let e = MonomialOrder::Elimination { eliminate: 1 };
        assert_eq!(e.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&mono(&[0, 3]), &mono(&[1, 0])), Ordering::Less);
    }
}
