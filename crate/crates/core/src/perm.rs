//! Permutations on `{0, .., degree-1}` in image form.

use std::fmt;

/// `img[i]` is the image of point `i`. Composition acts left-to-right on
/// points: `(a * b)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(img: Vec<u32>) -> Self {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            assert!((x as usize) < img.len() && !seen[x as usize], "not a permutation");
            seen[x as usize] = true;
        }
        Perm { img }
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(degree);
        p.img.swap(i, j);
        p
    }

    /// Build from disjoint cycles given as 0-based point lists.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Self {
        let mut p = Perm::identity(degree);
        for cyc in cycles {
            for w in 0..cyc.len() {
                p.img[cyc[w] as usize] = cyc[(w + 1) % cyc.len()];
            }
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn compose(&self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm {
            img: rhs.img.iter().map(|&i| self.img[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start as u32];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur as u32);
                cur = self.apply(cur);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut t: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn parity(&self) -> i32 {
        let swaps: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if swaps % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> u32 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u32)
            .fold(1u32, |acc, l| num_integer::lcm(acc, l))
    }

    pub fn pow(&self, k: u32) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points, fixed points suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<u32>> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cyc in nontrivial {
            write!(f, "(")?;
            for (k, p) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Perm::from_cycles(5, &[&[0, 1, 2]]);
        let b = Perm::transposition(5, 0, 1);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 2); // b: 0->1, a: 1->2
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.parity(), 1);
        assert_eq!(b.parity(), -1);
        assert_eq!(a.order(), 3);
    }

    #[test]
    fn cycle_type_sorted() {
        let p = Perm::from_cycles(6, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(format!("{p}"), "(1 2)(3 4 5)");
    }
}
