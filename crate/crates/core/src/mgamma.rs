//! The set M(Gamma) of pairs `(g, rho)` — a conjugacy class together with
//! an irreducible character of the centralizer — with the exact pairing,
//! convolution by invertible elements, and the Fourier matrix.

use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;

use crate::cyclo::Cyc;
use crate::exact::{rat_string, Int, Rat};
use crate::groups::{CharTable, GroupError, PermGroup};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MGammaError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("element is not invertible (needs central support and a linear character)")]
    NotInvertible,
    #[error("pairing value is not rational; integer-table assumption violated")]
    IrrationalPairing,
}

/// Index pair into the enumeration of M(Gamma): conjugacy class of the
/// group, then irreducible character of the centralizer of the canonical
/// class representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MGammaElt {
    pub class: usize,
    pub irr: usize,
}

struct ClassLocal {
    rep: Perm,
    centralizer: PermGroup,
}

pub struct MGamma {
    gamma: PermGroup,
    locals: Vec<ClassLocal>,
    elems: Vec<MGammaElt>,
    pairing_matrix: OnceLock<Result<Vec<Vec<Cyc>>, MGammaError>>,
}

impl MGamma {
    pub fn new(gamma: PermGroup) -> Result<Self, MGammaError> {
        let mut locals = Vec::new();
        let mut elems = Vec::new();
        let reps: Vec<Perm> = gamma
            .conjugacy_classes()
            .iter()
            .map(|(p, _)| (*p).clone())
            .collect();
        for (class, rep) in reps.into_iter().enumerate() {
            let centralizer = gamma.centralizer(&rep)?;
            let n_irr = centralizer.char_table()?.n_irreps();
            for irr in 0..n_irr {
                elems.push(MGammaElt { class, irr });
            }
            locals.push(ClassLocal { rep, centralizer });
        }
        Ok(MGamma {
            gamma,
            locals,
            elems,
            pairing_matrix: OnceLock::new(),
        })
    }

    pub fn gamma(&self) -> &PermGroup {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[MGammaElt] {
        &self.elems
    }

    pub fn position(&self, x: MGammaElt) -> usize {
        self.elems.iter().position(|e| *e == x).expect("element of M")
    }

    pub fn class_rep(&self, x: MGammaElt) -> &Perm {
        &self.locals[x.class].rep
    }

    pub fn centralizer(&self, x: MGammaElt) -> &PermGroup {
        &self.locals[x.class].centralizer
    }

    pub fn centralizer_order(&self, x: MGammaElt) -> usize {
        self.locals[x.class].centralizer.order()
    }

    pub fn rho_dim(&self, x: MGammaElt) -> Int {
        self.table(x.class).dim(x.irr).clone()
    }

    fn table(&self, class: usize) -> &CharTable {
        self.locals[class]
            .centralizer
            .char_table()
            .expect("table built at construction")
    }

    /// Character value of `rho_x` at an element of the centralizer of the
    /// class representative of `x`.
    fn rho_value(&self, x: MGammaElt, at: &Perm) -> Cyc {
        let local = &self.locals[x.class];
        let c = local
            .centralizer
            .class_of_element(at)
            .expect("argument must centralize the representative");
        self.table(x.class).value(x.irr, c).clone()
    }

    /// The identity element `(1, 1)`: trivial class, trivial character.
    pub fn unit(&self) -> MGammaElt {
        MGammaElt { class: 0, irr: 0 }
    }

    /// Exact pairing of two elements of M(Gamma), summing over the group
    /// elements that conjugate the supports into commuting position.
    ///
    /// Everything the classification needs is rational, and this accessor
    /// enforces that loudly. A handful of pairings between cuspidal-type
    /// pairs in M(S5) are genuinely cyclotomic; use [`MGamma::pairing_cyc`]
    /// for those.
    pub fn pairing(&self, x: MGammaElt, y: MGammaElt) -> Result<Rat, MGammaError> {
        self.pairing_cyc(x, y)?
            .as_rat()
            .ok_or(MGammaError::IrrationalPairing)
    }

    pub fn pairing_cyc(&self, x: MGammaElt, y: MGammaElt) -> Result<Cyc, MGammaError> {
        let m = self.pairing_matrix()?;
        Ok(m[self.position(x)][self.position(y)].clone())
    }

    pub fn pairing_matrix(&self) -> Result<&Vec<Vec<Cyc>>, MGammaError> {
        self.pairing_matrix
            .get_or_init(|| {
                let n = self.len();
                let mut m = vec![vec![Cyc::zero(); n]; n];
                for i in 0..n {
                    for j in 0..n {
                        m[i][j] = self.pairing_uncached(self.elems[i], self.elems[j])?;
                    }
                }
                Ok(m)
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn pairing_uncached(&self, x: MGammaElt, y: MGammaElt) -> Result<Cyc, MGammaError> {
        let g = self.class_rep(x).clone();
        let gp = self.class_rep(y).clone();
        let g_inv = g.inverse();
        let mut acc = Cyc::zero();
        for h in self.gamma.inner().elements() {
            let h_inv = h.inverse();
            let conj_g = h_inv.compose(&g).compose(h); // h^-1 g h
            if conj_g.compose(&gp) != gp.compose(&conj_g) {
                continue;
            }
            let left = h.compose(&gp).compose(&h_inv); // h g' h^-1, centralizes g
            let right = h_inv.compose(&g_inv).compose(h); // h^-1 g^-1 h, centralizes g'
            acc = acc.add(&self.rho_value(x, &left).mul(&self.rho_value(y, &right)));
        }
        let denom = Int::from((self.centralizer_order(x) * self.centralizer_order(y)) as i64);
        Ok(acc.scale(&Rat::new(Int::one(), denom)))
    }

    /// Invertibles: central support and a one-dimensional character.
    pub fn is_invertible(&self, x: MGammaElt) -> bool {
        let rep_idx = self
            .gamma
            .inner()
            .index_of(self.class_rep(x))
            .expect("class rep");
        self.gamma.inner().is_central(rep_idx) && self.rho_dim(x).is_one()
    }

    pub fn invertibles(&self) -> Vec<MGammaElt> {
        self.elems
            .iter()
            .copied()
            .filter(|&x| self.is_invertible(x))
            .collect()
    }

    /// Convolution by an invertible element: `(z, delta) * (g, rho)` is
    /// supported on the class of `z g` and twists `rho` by `delta`.
    pub fn convolve(&self, s: MGammaElt, x: MGammaElt) -> Result<MGammaElt, MGammaError> {
        if !self.is_invertible(s) {
            return Err(MGammaError::NotInvertible);
        }
        let z = self.class_rep(s).clone();
        let g = self.class_rep(x).clone();
        let product = z.compose(&g);
        let target_class = self
            .gamma
            .class_of_element(&product)
            .ok_or(GroupError::NotInGroup)?;
        let rep = self.locals[target_class].rep.clone();
        // Find a conjugator carrying the canonical representative to z*g.
        let conj = self
            .gamma
            .inner()
            .elements()
            .iter()
            .find(|h| h.compose(&rep).compose(&h.inverse()) == product)
            .expect("same class")
            .clone();
        // delta is a character of the whole group (central support), so it
        // can be evaluated anywhere; rho must be transported.
        let target = &self.locals[target_class].centralizer;
        let n_classes = target.char_table()?.n_classes();
        let mut wanted: Vec<Cyc> = Vec::with_capacity(n_classes);
        for (u, _) in target.conjugacy_classes() {
            let moved = conj.compose(u).compose(&conj.inverse());
            let delta_val = self.rho_value(s, &moved);
            let rho_val = self.rho_value(x, &moved);
            wanted.push(delta_val.mul(&rho_val));
        }
        let table = self.table(target_class);
        for irr in 0..table.n_irreps() {
            if (0..n_classes).all(|c| *table.value(irr, c) == wanted[c]) {
                return Ok(MGammaElt { class: target_class, irr });
            }
        }
        unreachable!("twisted character must be irreducible");
    }

    /// The convolution-homomorphism identity: pairing against `z` takes
    /// `x * y` to the product of pairings, normalized by `|Z(g_z)| / dim(rho_z)`,
    /// for every invertible `y`. Checked in exact cyclotomic arithmetic so
    /// it also covers the non-rational pairings of M(S5).
    pub fn check_convolution_hom(&self, z: MGammaElt) -> Result<bool, MGammaError> {
        let norm = Rat::new(
            Int::from(self.centralizer_order(z) as i64),
            self.rho_dim(z),
        );
        for &x in &self.elems {
            for s in self.invertibles() {
                let xy = self.convolve(s, x)?;
                let lhs = self.pairing_cyc(z, xy)?;
                let rhs = self
                    .pairing_cyc(z, x)?
                    .mul(&self.pairing_cyc(z, s)?)
                    .scale(&norm);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For abelian groups the pairing matrix is the Fourier kernel and must
    /// be an exact involution.
    pub fn fourier_is_involutive(&self) -> Result<bool, MGammaError> {
        let m = self.pairing_matrix()?;
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyc::zero();
                for (k, row) in m.iter().enumerate() {
                    acc = acc.add(&m[i][k].mul(&row[j]));
                    let _ = k;
                }
                let expect = if i == j { Cyc::one() } else { Cyc::zero() };
                if acc != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn pairing_matrix_json(&self) -> Result<serde_json::Value, MGammaError> {
        let m = self.pairing_matrix()?;
        let rows: Vec<Vec<String>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.as_rat().map_or_else(|| v.to_string(), |r| rat_string(&r)))
                    .collect()
            })
            .collect();
        Ok(serde_json::json!({
            "size": self.len(),
            "elements": self
                .elems
                .iter()
                .map(|e| self.describe(*e))
                .collect::<Vec<_>>(),
            "pairing": rows,
        }))
    }

    pub fn describe(&self, x: MGammaElt) -> String {
        format!(
            "({}, chi{}[dim {}])",
            self.class_rep(x),
            x.irr,
            self.rho_dim(x)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn sizes_of_m() {
        assert_eq!(MGamma::new(PermGroup::trivial()).unwrap().len(), 1);
        assert_eq!(MGamma::new(PermGroup::symmetric(2)).unwrap().len(), 4);
        assert_eq!(MGamma::new(PermGroup::symmetric(3)).unwrap().len(), 8);
        assert_eq!(
            MGamma::new(PermGroup::elementary_abelian_two(2)).unwrap().len(),
            16
        );
    }

    #[test]
    fn trivial_group_pairing() {
        let m = MGamma::new(PermGroup::trivial()).unwrap();
        let e = m.unit();
        assert_eq!(m.pairing(e, e).unwrap(), rat(1, 1));
    }

    #[test]
    fn z2_pairing_diagonal() {
        let m = MGamma::new(PermGroup::symmetric(2)).unwrap();
        let e = m.unit();
        assert_eq!(m.pairing(e, e).unwrap(), rat(1, 2));
        assert!(m.fourier_is_involutive().unwrap());
    }

    #[test]
    fn sign_pairing_formula_s3() {
        // Pairing against (1, sgn) evaluates the sign of the support times
        // dim(rho) / |Z(g)|.
        let gamma = PermGroup::symmetric(3);
        let m = MGamma::new(gamma).unwrap();
        let sgn_vals = m.gamma().sign_character().unwrap();
        let one_sgn = *m
            .elems()
            .iter()
            .find(|x| {
                x.class == 0
                    && m.table(0).integer_value(x.irr, 0).unwrap() == Int::one()
                    && (0..m.table(0).n_classes()).all(|c| {
                        m.table(0).integer_value(x.irr, c).unwrap() == sgn_vals[c]
                    })
            })
            .expect("(1, sgn) present");
        for &x in m.elems() {
            let sign_of_g = Rat::from_integer(Int::from(m.class_rep(x).parity() as i64));
            let expect = sign_of_g * Rat::new(m.rho_dim(x), Int::from(m.centralizer_order(x) as i64));
            assert_eq!(m.pairing(x, one_sgn).unwrap(), expect);
        }
    }

    #[test]
    fn convolution_unit_and_twist() {
        let m = MGamma::new(PermGroup::symmetric(3)).unwrap();
        let unit = m.unit();
        for &x in m.elems() {
            assert_eq!(m.convolve(unit, x).unwrap(), x);
        }
        // Convolving the transposition-supported trivial pair with (1,sgn)
        // keeps the support and twists the character.
        let invs = m.invertibles();
        assert_eq!(invs.len(), 2);
        let one_sgn = invs[1];
        assert_ne!(one_sgn, unit);
        for &x in m.elems() {
            let y = m.convolve(one_sgn, x).unwrap();
            assert_eq!(y.class, x.class);
            let z = m.convolve(one_sgn, y).unwrap();
            assert_eq!(z, x, "sign twist is an involution");
        }
    }

    #[test]
    fn ring_hom_small_groups() {
        for gamma in [
            PermGroup::trivial(),
            PermGroup::symmetric(2),
            PermGroup::symmetric(3),
        ] {
            let m = MGamma::new(gamma).unwrap();
            for &z in m.elems() {
                assert!(m.check_convolution_hom(z).unwrap());
            }
        }
    }

    #[test]
    fn invertibles_square_to_unit() {
        for gamma in [
            PermGroup::symmetric(3),
            PermGroup::elementary_abelian_two(2),
        ] {
            let m = MGamma::new(gamma).unwrap();
            for s in m.invertibles() {
                assert_eq!(m.convolve(s, s).unwrap(), m.unit());
            }
        }
    }
}
