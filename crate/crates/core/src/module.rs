//! Canonical forms of finitely generated graded Q[c]-modules.
//!
//! Over the graded PID Q[c] every f.g. graded module is a finite direct sum
//! of shifted copies of Q[c] and of Q[c]/(c^n), and the multiset of summands
//! is a complete isomorphism invariant. [`CanonicalModule`] stores exactly
//! that data, sorted, so structural equality is isomorphism.
//!
//! Grading conventions, fixed once for the whole engine:
//! * c has degree −2, so Q[c] is one-dimensional in degrees 0, −2, −4, …
//! * (Σ^d M)_k = M_{k−d}; Σ^d raises degrees by d.
//! * Σ^e Q[c]/(c^n) is one-dimensional exactly in degrees e, e−2, …, e−2(n−1).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// An inclusive interval of internal degrees, used to report the graded
/// pieces of (possibly infinite) modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub const DEFAULT: Window = Window { lo: -32, hi: 32 };

    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty degree window");
        Window { lo, hi }
    }

    pub fn contains(&self, degree: i64) -> bool {
        self.lo <= degree && degree <= self.hi
    }

    pub fn degrees(&self) -> impl DoubleEndedIterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

/// Degree → dimension, with zero entries omitted.
pub type DimProfile = BTreeMap<i64, usize>;

/// One generator of a canonical module: its degree, and its c-order if it
/// generates a torsion summand (`None` for a free summand).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    pub degree: i64,
    pub torsion_order: Option<u32>,
}

/// A f.g. graded Q[c]-module in invariant form: free shifts Σ^d Q[c] and
/// torsion pairs Σ^e Q[c]/(c^n).
///
/// Both lists are kept sorted (free by shift; torsion by shift, then order),
/// so two canonical modules are isomorphic iff they are equal. The zero
/// module is the empty sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CanonicalModule {
    free_shifts: Vec<i64>,
    torsion_summands: Vec<(i64, u32)>,
}

impl CanonicalModule {
    pub fn new(mut free_shifts: Vec<i64>, torsion_summands: Vec<(i64, u32)>) -> Self {
        assert!(
            torsion_summands.iter().all(|&(_, n)| n >= 1),
            "torsion order must be positive"
        );
        free_shifts.sort_unstable();
        let mut torsion_summands = torsion_summands;
        torsion_summands.sort_unstable();
        CanonicalModule { free_shifts, torsion_summands }
    }

    pub fn zero() -> Self {
        CanonicalModule::default()
    }

    /// Σ^d Q[c].
    pub fn free(shift: i64) -> Self {
        CanonicalModule::new(vec![shift], vec![])
    }

    /// Σ^e Q[c]/(c^n).
    pub fn torsion(shift: i64, order: u32) -> Self {
        CanonicalModule::new(vec![], vec![(shift, order)])
    }

    pub fn is_zero(&self) -> bool {
        self.free_shifts.is_empty() && self.torsion_summands.is_empty()
    }

    pub fn free_shifts(&self) -> &[i64] {
        &self.free_shifts
    }

    pub fn torsion_summands(&self) -> &[(i64, u32)] {
        &self.torsion_summands
    }

    pub fn is_all_torsion(&self) -> bool {
        self.free_shifts.is_empty()
    }

    pub fn is_all_free(&self) -> bool {
        self.torsion_summands.is_empty()
    }

    /// True when every torsion summand has order 1 and there are no free
    /// summands, i.e. c acts as zero.
    pub fn has_trivial_c_action(&self) -> bool {
        self.free_shifts.is_empty() && self.torsion_summands.iter().all(|&(_, n)| n == 1)
    }

    /// Generators in the fixed order used by every matrix in the engine:
    /// free summands first (ascending shift), then torsion summands
    /// (ascending shift, then order).
    pub fn generators(&self) -> Vec<Generator> {
        self.free_shifts
            .iter()
            .map(|&d| Generator { degree: d, torsion_order: None })
            .chain(
                self.torsion_summands
                    .iter()
                    .map(|&(e, n)| Generator { degree: e, torsion_order: Some(n) }),
            )
            .collect()
    }

    pub fn generator_count(&self) -> usize {
        self.free_shifts.len() + self.torsion_summands.len()
    }

    /// Σ^k of this module.
    pub fn shift(&self, k: i64) -> Self {
        CanonicalModule {
            free_shifts: self.free_shifts.iter().map(|d| d + k).collect(),
            torsion_summands: self.torsion_summands.iter().map(|&(e, n)| (e + k, n)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &CanonicalModule) -> Self {
        let mut free = self.free_shifts.clone();
        free.extend_from_slice(&other.free_shifts);
        let mut torsion = self.torsion_summands.clone();
        torsion.extend_from_slice(&other.torsion_summands);
        CanonicalModule::new(free, torsion)
    }

    /// Exact dimension of the degree-k piece.
    pub fn dim_at(&self, k: i64) -> usize {
        let free = self
            .free_shifts
            .iter()
            .filter(|&&d| k <= d && (d - k) % 2 == 0)
            .count();
        let torsion = self
            .torsion_summands
            .iter()
            .filter(|&&(e, n)| {
                k <= e && (e - k) % 2 == 0 && ((e - k) / 2) < i64::from(n)
            })
            .count();
        free + torsion
    }

    /// Dimension profile over a window; zero degrees omitted.
    pub fn dims_in_window(&self, window: Window) -> DimProfile {
        let mut profile = DimProfile::new();
        for k in window.degrees() {
            let d = self.dim_at(k);
            if d > 0 {
                profile.insert(k, d);
            }
        }
        profile
    }

    /// The submodule c·M, again in canonical form: c·Σ^d Q[c] = Σ^{d−2}Q[c]
    /// and c·Σ^e Q[c]/(c^n) = Σ^{e−2}Q[c]/(c^{n−1}).
    pub fn c_submodule(&self) -> Self {
        CanonicalModule {
            free_shifts: self.free_shifts.iter().map(|d| d - 2).collect(),
            torsion_summands: self
                .torsion_summands
                .iter()
                .filter(|&&(_, n)| n > 1)
                .map(|&(e, n)| (e - 2, n - 1))
                .collect(),
        }
    }

    /// Dimension profile of c·M over a window.
    pub fn c_multiple_dims(&self, window: Window) -> DimProfile {
        self.c_submodule().dims_in_window(window)
    }

    /// Total dimension over Q; `None` when a free summand makes it infinite.
    pub fn total_dim(&self) -> Option<usize> {
        if self.free_shifts.is_empty() {
            Some(self.torsion_summands.iter().map(|&(_, n)| n as usize).sum())
        } else {
            None
        }
    }

    /// Degrees in which the module is nonzero; `None` when a free summand
    /// makes the support infinite.
    pub fn support(&self) -> Option<Vec<i64>> {
        if !self.free_shifts.is_empty() {
            return None;
        }
        let mut degrees: Vec<i64> = self
            .torsion_summands
            .iter()
            .flat_map(|&(e, n)| (0..i64::from(n)).map(move |j| e - 2 * j))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        Some(degrees)
    }
}

impl Serialize for CanonicalModule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A direct sum with bookkeeping: `indices[p][g]` is the generator index in
/// `module` of generator `g` of part `p`. Needed whenever a matrix is
/// assembled blockwise, because canonical generators are sorted.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: CanonicalModule,
    pub indices: Vec<Vec<usize>>,
}

impl DirectSum {
    pub fn new(parts: &[&CanonicalModule]) -> Self {
        // Tag each generator with (sort key, part, index-in-part), sort the
        // way CanonicalModule::generators does, then invert the permutation.
        let mut tagged: Vec<(bool, i64, u32, usize, usize)> = Vec::new();
        for (p, part) in parts.iter().enumerate() {
            for (g, generator) in part.generators().iter().enumerate() {
                let (is_torsion, order) = match generator.torsion_order {
                    None => (false, 0),
                    Some(n) => (true, n),
                };
                tagged.push((is_torsion, generator.degree, order, p, g));
            }
        }
        tagged.sort();

        let module = parts
            .iter()
            .fold(CanonicalModule::zero(), |acc, part| acc.direct_sum(part));

        let mut indices: Vec<Vec<usize>> =
            parts.iter().map(|p| vec![0; p.generator_count()]).collect();
        for (position, &(_, _, _, p, g)) in tagged.iter().enumerate() {
            indices[p][g] = position;
        }

        debug_assert_eq!(module.generator_count(), tagged.len());
        DirectSum { module, indices }
    }
}

impl fmt::Display for CanonicalModule {
    /// Canonical printing in the module grammar: free summands first, then
    /// torsion, both ascending; the zero module prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in &self.free_shifts {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "F[{d}]")?;
            first = false;
        }
        for (e, n) in &self.torsion_summands {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "T[{e};{n}]")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_storage_gives_structural_equality() {
        let a = CanonicalModule::new(vec![3, -1], vec![(0, 2), (-2, 1)]);
        let b = CanonicalModule::new(vec![-1, 3], vec![(-2, 1), (0, 2)]);
        assert_eq!(a, b);
    }

    #[test]
    fn dims_of_shifted_torsion() {
        // Σ³Q[c]/(c²) is one-dimensional in degrees 3 and 1.
        let m = CanonicalModule::torsion(3, 2);
        let dims = m.dims_in_window(Window::new(0, 4));
        assert_eq!(dims, DimProfile::from([(1, 1), (3, 1)]));
    }

    #[test]
    fn free_module_lives_in_nonpositive_even_degrees() {
        let m = CanonicalModule::free(0);
        assert!(m.dims_in_window(Window::new(1, 5)).is_empty());
        assert_eq!(m.dim_at(0), 1);
        assert_eq!(m.dim_at(-2), 1);
        assert_eq!(m.dim_at(-1), 0);
    }

    #[test]
    fn two_odd_spheres_profile() {
        // Σ¹Q ⊕ Σ⁴Q over [0,5].
        let m = CanonicalModule::new(vec![], vec![(1, 1), (4, 1)]);
        let dims = m.dims_in_window(Window::new(0, 5));
        assert_eq!(dims, DimProfile::from([(1, 1), (4, 1)]));
    }

    #[test]
    fn c_submodule_cases() {
        // c·Σ⁵Q[c]/(c²) = Σ³Q[c]/(c): {3:1}
        let m = CanonicalModule::torsion(5, 2);
        assert_eq!(
            m.c_multiple_dims(Window::new(-10, 10)),
            DimProfile::from([(3, 1)])
        );

        // order-1 torsion is killed by c
        let m = CanonicalModule::new(vec![], vec![(1, 1), (4, 1)]);
        assert!(m.c_multiple_dims(Window::new(-10, 10)).is_empty());

        // c·Q[c]/(c⁴) = Σ^{-2}Q[c]/(c³): {−2:1, −4:1, −6:1}
        let m = CanonicalModule::torsion(0, 4);
        assert_eq!(
            m.c_multiple_dims(Window::new(-8, 8)),
            DimProfile::from([(-2, 1), (-4, 1), (-6, 1)])
        );
    }

    #[test]
    fn shift_law_for_dims() {
        let m = CanonicalModule::new(vec![-2], vec![(1, 3)]);
        let shifted = m.shift(5);
        for k in -12..12 {
            assert_eq!(shifted.dim_at(k), m.dim_at(k - 5));
        }
    }

    #[test]
    fn zero_module_prints_and_behaves() {
        let z = CanonicalModule::zero();
        assert_eq!(z.to_string(), "0");
        assert!(z.dims_in_window(Window::DEFAULT).is_empty());
        assert_eq!(z.total_dim(), Some(0));
    }

    #[test]
    fn direct_sum_indices_land_on_matching_generators() {
        let a = CanonicalModule::new(vec![0], vec![(5, 2)]);
        let b = CanonicalModule::new(vec![-3], vec![(1, 1)]);
        let sum = DirectSum::new(&[&a, &b]);
        let gens = sum.module.generators();
        for (p, part) in [&a, &b].iter().enumerate() {
            for (g, generator) in part.generators().iter().enumerate() {
                assert_eq!(gens[sum.indices[p][g]], *generator);
            }
        }
    }
}
