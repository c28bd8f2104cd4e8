//! Deterministic Schreier–Sims with explicit transversals.

use super::perm::Perm;
use crate::factored::{factor_integer, FactoredInteger};

struct Level {
    base_point: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[b]` maps the base point to `b`; `inverse[b]` is its inverse.
    transversal: Vec<Option<Perm>>,
    inverse: Vec<Option<Perm>>,
    /// For each orbit position, how many generators have had their Schreier
    /// generator verified. Transversal entries never change once set, so a
    /// verified pair stays verified as the level grows.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base_point as usize] = Some(Perm::identity(degree));
        inverse[base_point as usize] = Some(Perm::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverse,
            checked: vec![0],
        }
    }

    fn add_generator(&mut self, g: Perm) {
        self.gens.push(g);
        let newest = self.gens.len() - 1;
        let old_len = self.orbit.len();
        for i in 0..old_len {
            self.extend(i, newest);
        }
        let mut i = old_len;
        while i < self.orbit.len() {
            for k in 0..self.gens.len() {
                self.extend(i, k);
            }
            i += 1;
        }
    }

    fn extend(&mut self, pos: usize, gen: usize) {
        let b = self.orbit[pos];
        let g = &self.gens[gen];
        let c = g.apply(b);
        if self.transversal[c as usize].is_none() {
            let u = self.transversal[b as usize].as_ref().expect("orbit point").compose(g);
            self.inverse[c as usize] = Some(u.inverse());
            self.transversal[c as usize] = Some(u);
            self.orbit.push(c);
            self.checked.push(0);
        }
    }
}

/// A base and strong generating set for a permutation group.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> StabilizerChain {
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        let base: Vec<u32> = chain.levels.iter().map(|l| l.base_point).collect();
        for (i, level) in chain.levels.iter_mut().enumerate() {
            for g in gens.iter().filter(|g| base[..i].iter().all(|&b| g.apply(b) == b)) {
                level.add_generator(g.clone());
            }
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_missing_generator(lvl) {
                Some((y, j)) => {
                    if j == self.levels.len() {
                        let b = y.moved_point().expect("sifted residue is non-identity");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].add_generator(y.clone());
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Sifts the unverified Schreier generators of level `lvl`; returns the
    /// first residue not accounted for by the levels below, with its drop-out level.
    fn find_missing_generator(&mut self, lvl: usize) -> Option<(Perm, usize)> {
        let mut pos = 0;
        while pos < self.levels[lvl].orbit.len() {
            while self.levels[lvl].checked[pos] < self.levels[lvl].gens.len() {
                let level = &self.levels[lvl];
                let b = level.orbit[pos];
                let g = &level.gens[level.checked[pos]];
                let u = level.transversal[b as usize].as_ref().expect("orbit point");
                let c = g.apply(b);
                let h = u.compose(g).compose(level.inverse[c as usize].as_ref().expect("orbit point"));
                if !h.is_identity() {
                    let (y, j) = self.strip(h, lvl + 1);
                    if j < self.levels.len() || !y.is_identity() {
                        return Some((y, j));
                    }
                }
                self.levels[lvl].checked[pos] += 1;
            }
            pos += 1;
        }
        None
    }

    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base_point);
            match &level.inverse[b as usize] {
                Some(inv) => g = g.compose(inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (y, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && y.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> FactoredInteger {
        self.levels.iter().fold(FactoredInteger::one(), |acc, l| {
            acc.multiply(&factor_integer(l.orbit.len() as u128).expect("orbit length is small"))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[u32]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_and_alternating() {
        let s5 = StabilizerChain::new(5, &[cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4, 5]])]);
        assert_eq!(s5.order().decimal(), "120");
        let a6 = StabilizerChain::new(6, &[cyc(6, &[&[1, 2, 3]]), cyc(6, &[&[2, 3, 4, 5, 6]])]);
        assert_eq!(a6.order().decimal(), "360");
        assert!(a6.contains(&cyc(6, &[&[1, 2], &[3, 4]])));
        assert!(!a6.contains(&cyc(6, &[&[1, 2]])));
    }

    #[test]
    fn trivial_and_cyclic() {
        assert!(StabilizerChain::new(4, &[Perm::identity(4)]).order().is_one());
        assert!(StabilizerChain::new(4, &[]).order().is_one());
        let c = StabilizerChain::new(7, &[cyc(7, &[&[1, 2, 3], &[4, 5, 6, 7]])]);
        assert_eq!(c.order().decimal(), "12");
    }
}
