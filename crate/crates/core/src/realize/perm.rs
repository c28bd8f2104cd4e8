use std::fmt;

use crate::error::{Error, Result};
use crate::factored::gcd;

/// A permutation of `{0, .., n-1}` stored as its image list.
///
/// Products act left to right: `a.compose(&b)` applies `a` first, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::domain(format!("image {x} out of range for degree {n}")))?;
            if std::mem::replace(slot, true) {
                return Err(Error::domain(format!("image {x} repeated; not a bijection")));
            }
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based cycles, e.g. `&[&[1, 2], &[3, 4, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x as usize > degree {
                    return Err(Error::domain(format!("point {x} outside 1..={degree}")));
                }
                if std::mem::replace(&mut used[x as usize - 1], true) {
                    return Err(Error::domain(format!("point {x} appears twice in the cycles")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[x as usize - 1] = next - 1;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn compose(&self, then: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&x| then.images[x as usize]).collect(),
        }
    }

    /// Writes `self * then` into `out` without allocating.
    pub(crate) fn compose_into(&self, then: &Perm, out: &mut Perm) {
        out.images.clear();
        out.images.extend(self.images.iter().map(|&x| then.images[x as usize]));
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens = cycle_lengths(&self.images);
        lens.sort_unstable();
        lens
    }

    /// Order as the lcm of cycle lengths, `None` on `u64` overflow.
    pub fn order_checked(&self) -> Option<u64> {
        order_of_images(&self.images)
    }

    /// Element order, failing when it would exceed `cap`.
    pub fn element_order(&self, cap: u64) -> Result<u64> {
        match self.order_checked() {
            Some(o) if o <= cap => Ok(o),
            _ => Err(Error::OrderCapExceeded(cap)),
        }
    }

    pub fn moved_point(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i as u32)
    }
}

fn cycle_lengths(images: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
            len += 1;
        }
        lens.push(len);
    }
    lens
}

pub(crate) fn order_of_images(images: &[u32]) -> Option<u64> {
    // Small degrees: a bitmask avoids the allocation.
    if images.len() <= 64 {
        let mut seen = 0u64;
        let mut order = 1u64;
        for start in 0..images.len() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                x = images[x] as usize;
                len += 1;
            }
            order = (order / gcd(order, len)).checked_mul(len)?;
        }
        return Some(order);
    }
    cycle_lengths(images)
        .into_iter()
        .try_fold(1u64, |acc, len| (acc / gcd(acc, len as u64)).checked_mul(len as u64))
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(Perm::identity(5).element_order(1).unwrap(), 1);
        let g = Perm::from_cycles(5, &[&[1, 2], &[3, 4, 5]]).unwrap();
        assert_eq!(g.element_order(100).unwrap(), 6);
        assert!(matches!(g.element_order(5), Err(Error::OrderCapExceeded(5))));
        let seven = Perm::from_cycles(8, &[&[1, 2, 3, 4, 5, 6, 7]]).unwrap();
        assert_eq!(seven.element_order(u64::MAX).unwrap(), 7);
        assert_eq!(g.to_string(), "(1,2)(3,4,5)");
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&b).pow(3), Perm::identity(3));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
        assert!(Perm::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn large_degree_order() {
        let mut images: Vec<u32> = (0..100).collect();
        images.rotate_left(1);
        let p = Perm::from_images(images).unwrap();
        assert_eq!(p.order_checked(), Some(100));
    }
}
