use super::CanonicalMonomial;
use crate::error::{precondition, Result};

/// A monomial ideal given by its minimal generators.
///
/// Generators are exponent vectors over a fixed number of variables, kept
/// minimal (none divides another) and sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            !gens
                .iter()
                .enumerate()
                .any(|(j, h)| i != j && divides(h, g))
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != num_vars) {
            return precondition(format!(
                "generator {g:?} does not have {num_vars} exponents"
            ));
        }
        Ok(Self {
            num_vars,
            generators: minimalize(generators),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Membership of the monomial `y^exponents`.
    pub fn contains(&self, exponents: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, exponents))
    }

    /// Intersection with another ideal over the same variables.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars {
            return precondition("ideals live in different variable counts");
        }
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| lcm(a, b)))
            .collect();
        Self::new(self.num_vars, gens)
    }
}

/// `M^⊥ = (y_1^{b_1+1}, ..., y_n^{b_n+1})` for a canonical monomial.
pub fn perp_generators(c: &CanonicalMonomial) -> MonomialIdeal {
    let n = c.num_vars();
    let gens = c
        .exponents()
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let mut g = vec![0; n];
            g[i] = b + 1;
            g
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("pure powers share the variable count")
}

/// Minimal generators of `I_1 ∩ ... ∩ I_r`, built by pairwise lcm closure.
pub fn ideal_intersect(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let Some((first, rest)) = ideals.split_first() else {
        return precondition("no ideals to intersect");
    };
    rest.iter()
        .try_fold(first.clone(), |acc, ideal| acc.intersect(ideal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn canon(e: &[u32]) -> CanonicalMonomial {
        CanonicalMonomial::from_sorted(e.to_vec()).unwrap()
    }

    /// All exponent vectors in `n` variables of total degree `<= max_deg`.
    fn monomials_up_to(n: usize, max_deg: u32) -> Vec<Vec<u32>> {
        fn go(n: usize, left: u32, buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if buf.len() == n {
                out.push(buf.clone());
                return;
            }
            for e in 0..=left {
                buf.push(e);
                go(n, left - e, buf, out);
                buf.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_deg, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn perp_examples() {
        assert_eq!(
            perp_generators(&canon(&[1, 1, 1])).generators(),
            &[vec![0, 0, 2], vec![0, 2, 0], vec![2, 0, 0]]
        );
        assert_eq!(perp_generators(&canon(&[2])).generators(), &[vec![3]]);
        assert_eq!(
            perp_generators(&canon(&[1, 2])).generators(),
            &[vec![0, 3], vec![2, 0]]
        );
    }

    #[test]
    fn intersection_examples() {
        let i = ideal_intersect(&[ideal(2, &[&[2, 0]]), ideal(2, &[&[0, 2]])]).unwrap();
        assert_eq!(i.generators(), &[vec![2, 2]]);

        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(ideal_intersect(&[a.clone(), a.clone()]).unwrap(), a);

        let b = ideal(2, &[&[3, 0], &[0, 2]]);
        let i = ideal_intersect(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(i.generators(), &[vec![0, 3], vec![2, 2], vec![3, 0]]);
        for m in monomials_up_to(2, 6) {
            assert_eq!(i.contains(&m), a.contains(&m) && b.contains(&m), "{m:?}");
        }
    }

    #[test]
    fn minimalization_and_errors() {
        let i = ideal(2, &[&[1, 1], &[2, 1], &[1, 1], &[0, 3]]);
        assert_eq!(i.generators(), &[vec![0, 3], vec![1, 1]]);
        assert!(MonomialIdeal::new(2, vec![vec![1]]).is_err());
        assert!(ideal(2, &[&[1, 0]])
            .intersect(&ideal(3, &[&[1, 0, 0]]))
            .is_err());
        assert!(ideal_intersect(&[]).is_err());
    }

    fn small_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, n), 1..4)
            .prop_map(move |g| MonomialIdeal::new(n, g).unwrap())
    }

    proptest! {
        #[test]
        fn intersection_matches_membership_oracle(
            (n, ideals) in (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(small_ideal(n), 1..4)))
        ) {
            let i = ideal_intersect(&ideals).unwrap();
            for m in monomials_up_to(n, 8) {
                prop_assert_eq!(i.contains(&m), ideals.iter().all(|j| j.contains(&m)));
            }
            for (k, g) in i.generators().iter().enumerate() {
                for (l, h) in i.generators().iter().enumerate() {
                    prop_assert!(k == l || !divides(h, g));
                }
            }
        }
    }
}
