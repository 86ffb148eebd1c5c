//! Deterministic Schreier–Sims with Schreier vectors.
//!
//! Base points are chosen as the smallest point moved by the element that
//! forces a new level. Transversal elements are never stored; they are
//! rebuilt by tracing the Schreier vector, so memory stays `O(degree)` per
//! level even for induced actions on tens of thousands of subsets.

use super::perm::Permutation;

const NOT_IN_ORBIT: i32 = -1;
const ROOT: i32 = -2;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    gen_invs: Vec<Permutation>,
    orbit: Vec<u32>,
    back: Vec<i32>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            gen_invs: Vec::new(),
            orbit: Vec::new(),
            back: vec![NOT_IN_ORBIT; degree],
        };
        level.rebuild();
        level
    }

    fn push_gen(&mut self, g: Permutation) {
        self.gen_invs.push(g.inverse());
        self.gens.push(g);
        self.rebuild();
    }

    fn rebuild(&mut self) {
        self.back.iter_mut().for_each(|b| *b = NOT_IN_ORBIT);
        self.orbit.clear();
        self.back[self.base as usize] = ROOT;
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for (j, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.back[y as usize] == NOT_IN_ORBIT {
                    self.back[y as usize] = j as i32;
                    self.orbit.push(y);
                }
            }
        }
    }

    fn contains(&self, x: u32) -> bool {
        self.back[x as usize] != NOT_IN_ORBIT
    }

    /// Generator indices along the tree path from the base to `x`.
    fn path(&self, mut x: u32) -> Vec<usize> {
        let mut path = Vec::new();
        loop {
            match self.back[x as usize] {
                ROOT => break,
                NOT_IN_ORBIT => panic!("point {x} not in orbit"),
                j => {
                    path.push(j as usize);
                    x = self.gen_invs[j as usize].apply(x);
                }
            }
        }
        path.reverse();
        path
    }

    /// `u_x` with `base·u_x = x`.
    fn transversal(&self, x: u32, degree: usize) -> Permutation {
        let mut u = Permutation::identity(degree);
        for j in self.path(x) {
            u = u.then(&self.gens[j]);
        }
        u
    }

    /// `u_x⁻¹`.
    fn transversal_inverse(&self, x: u32, degree: usize) -> Permutation {
        let mut u = Permutation::identity(degree);
        for j in self.path(x).into_iter().rev() {
            u = u.then(&self.gen_invs[j]);
        }
        u
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Runs Schreier–Sims. If `order_bound` is an upper bound for the group
    /// order, the run stops as soon as the basic orbits multiply up to it.
    pub fn build(degree: usize, gens: &[Permutation], order_bound: Option<u128>) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            let first_moved = chain.levels.iter().position(|l| g.apply(l.base) != l.base);
            let top = match first_moved {
                Some(i) => i,
                None => {
                    let b = g.smallest_moved_point().expect("non-identity");
                    chain.levels.push(Level::new(b, degree));
                    chain.levels.len() - 1
                }
            };
            for level in &mut chain.levels[..=top] {
                level.gens.push(g.clone());
                level.gen_invs.push(g.inverse());
            }
        }
        for level in &mut chain.levels {
            level.rebuild();
        }
        if chain.levels.is_empty() {
            return chain;
        }

        let complete = |c: &StabChain| order_bound.is_some_and(|b| c.order() >= b);
        let mut i = chain.levels.len() as isize - 1;
        'outer: while i >= 0 {
            if complete(&chain) {
                break;
            }
            let li = i as usize;
            let orbit = chain.levels[li].orbit.clone();
            let ngens = chain.levels[li].gens.len();
            for &x in &orbit {
                let ux = chain.levels[li].transversal(x, degree);
                for s in 0..ngens {
                    let y = chain.levels[li].gens[s].apply(x);
                    let h = ux
                        .then(&chain.levels[li].gens[s])
                        .then(&chain.levels[li].transversal_inverse(y, degree));
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, drop) = chain.sift_from(h, li + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if drop == chain.levels.len() {
                        let b = residue.smallest_moved_point().expect("non-identity");
                        chain.levels.push(Level::new(b, degree));
                    }
                    for level in &mut chain.levels[li + 1..=drop] {
                        level.push_gen(residue.clone());
                    }
                    i = drop as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
        chain
    }

    /// Strips `g` through the levels starting at `from`; returns the residue
    /// and the level at which it dropped out (`levels.len()` if it passed all).
    fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let y = g.apply(level.base);
            if !level.contains(y) {
                return (g, l);
            }
            g = g.then(&level.transversal_inverse(y, self.degree));
        }
        (g, self.levels.len())
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(g.clone(), 0);
        residue.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub fn strong_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels.get(depth).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// All group elements, as products `u_(m-1) ··· u_0` of transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let transversals: Vec<Vec<Permutation>> = self
            .levels
            .iter()
            .map(|l| l.orbit.iter().map(|&x| l.transversal(x, self.degree)).collect())
            .collect();
        let mut acc = vec![Permutation::identity(self.degree)];
        for t in transversals.iter() {
            let mut next = Vec::with_capacity(acc.len() * t.len());
            for u in t {
                for a in &acc {
                    next.push(u.then(a));
                }
            }
            acc = next;
        }
        acc
    }
}
