//! Free resolutions of modules, built degree by degree. Differentials are
//! stored as matrices with entries in the algebra, so the same resolution
//! can later be turned into a Hom complex (for Ext) or a tensor complex
//! (for Tor) against any coefficient module.

use qhc_algebra::{radical_basis, Algebra, Representation};
use qhc_linalg::{rref, smith_normal_form, solve_field, Domain, Matrix, RowEchelon, Scalar};

use crate::{HomologyError, Result};

/// A matrix whose entries are algebra elements, representing a map of free
/// left modules `A^cols -> A^rows` by `e_j |-> (entry(i, j))_i`; a general
/// element maps by `(a_j)_j |-> (sum_j a_j * entry(i, j))_i`.
#[derive(Debug, Clone)]
pub struct AlgebraMatrix {
    algebra_dim: usize,
    rows: usize,
    cols: usize,
    /// Row-major; `entries[r * cols + c]` holds the coordinates of one
    /// algebra element.
    entries: Vec<Vec<Scalar>>,
}

impl AlgebraMatrix {
    /// Build from flat columns: each column has `rows * dim(A)` scalar
    /// coordinates, the block `[i*dim(A), (i+1)*dim(A))` being entry `i`.
    pub fn from_free_columns(algebra: &Algebra, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let n = algebra.dim();
        let cols = columns.len();
        let mut entries = vec![Vec::new(); rows * cols];
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows * n, "column height mismatch");
            for r in 0..rows {
                entries[r * cols + c] = col[r * n..(r + 1) * n].to_vec();
            }
        }
        AlgebraMatrix { algebra_dim: n, rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Coordinates of the algebra element at `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> &[Scalar] {
        &self.entries[r * self.cols + c]
    }

    /// The scalar matrix of the map `A^cols -> A^rows` on flat coordinate
    /// vectors (block `j` of the input is the `j`-th free coordinate).
    pub fn scalar_action(&self, algebra: &Algebra) -> Matrix {
        let n = algebra.dim();
        assert_eq!(n, self.algebra_dim, "algebra dimension mismatch");
        let blocks: Vec<Matrix> = self
            .entries
            .iter()
            .map(|e| algebra.right_mult_matrix(e))
            .collect();
        Matrix::from_fn(algebra.domain(), self.rows * n, self.cols * n, |r, c| {
            blocks[(r / n) * self.cols + (c / n)].get(r % n, c % n)
        })
    }

    /// The map induced on `Hom_A(-, N)` under `Hom_A(A^t, N) = N^t`:
    /// a matrix `N^rows -> N^cols` whose block `(j, i)` is the action of
    /// `entry(i, j)` on `N`.
    pub fn hom_map(&self, target: &Representation) -> Matrix {
        let dn = target.dim();
        let blocks: Vec<Matrix> = self
            .entries
            .iter()
            .map(|e| target.element_action(e))
            .collect();
        Matrix::from_fn(target.domain(), self.cols * dn, self.rows * dn, |r, c| {
            // output block j = r / dn, input block i = c / dn
            blocks[(c / dn) * self.cols + (r / dn)].get(r % dn, c % dn)
        })
    }

    /// The map induced on `V (x)_A -` under `V (x)_A A^t = V^t` for a right
    /// module `V` (given as a representation of the opposite algebra):
    /// a matrix `V^cols -> V^rows` whose block `(i, j)` is the right action
    /// of `entry(i, j)` on `V`.
    pub fn tensor_map(&self, right_module: &Representation) -> Matrix {
        let dv = right_module.dim();
        let blocks: Vec<Matrix> = self
            .entries
            .iter()
            .map(|e| right_module.element_action(e))
            .collect();
        Matrix::from_fn(right_module.domain(), self.rows * dv, self.cols * dv, |r, c| {
            blocks[(r / dv) * self.cols + (c / dv)].get(r % dv, c % dv)
        })
    }
}

/// How generators are chosen when extending a resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strategy {
    /// Greedy subset of the kernel basis, each generator closed under the
    /// algebra action before the next is considered. Works over every
    /// domain; term ranks need not be minimal.
    Greedy { reverse_candidates: bool },
    /// Generators lift a basis of `K / rad(A) K`, so no generator is
    /// redundant and the term rank equals the head dimension of the syzygy.
    /// Over a local algebra this reproduces the classical minimal
    /// resolution; across several blocks a greedy cover can be smaller,
    /// because one free generator may cover heads in different blocks.
    /// Requires a field and a computable radical.
    Minimal,
}

/// A free resolution `... -> A^{t_1} -> A^{t_0} -> M -> 0`, extended on
/// demand. Exactness holds at every constructed stage by construction: each
/// differential's image is exactly the previously computed kernel.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    strategy: Strategy,
    /// Radical basis of the algebra (minimal strategy only).
    radical: Option<Matrix>,
    ranks: Vec<usize>,
    /// `differentials[k]` is `d_{k+1}: A^{ranks[k+1]} -> A^{ranks[k]}`.
    differentials: Vec<AlgebraMatrix>,
    /// Scalar matrix of the augmentation `A^{ranks[0]} -> M`.
    augmentation: Matrix,
    /// Kernel of the last constructed map, as flat columns in the last term.
    kernel: Matrix,
    /// Set once the kernel reaches zero; no further terms are needed.
    finished: bool,
}

impl FreeResolution {
    /// Start a resolution with generator-greedy covers.
    pub fn greedy(algebra: &Algebra, module: &Representation) -> Result<FreeResolution> {
        Self::start(algebra, module, Strategy::Greedy { reverse_candidates: false })
    }

    /// Same as [`FreeResolution::greedy`] but walking generator candidates
    /// in the opposite order; Ext and Tor must not depend on the choice.
    pub fn greedy_reversed(algebra: &Algebra, module: &Representation) -> Result<FreeResolution> {
        Self::start(algebra, module, Strategy::Greedy { reverse_candidates: true })
    }

    /// Start a resolution whose generators lift a head basis of each syzygy
    /// (prime fields; the algebra must be small enough for its radical to be
    /// computed). Over a local algebra this is the minimal resolution.
    pub fn minimal(algebra: &Algebra, module: &Representation) -> Result<FreeResolution> {
        Self::start(algebra, module, Strategy::Minimal)
    }

    fn start(
        algebra: &Algebra,
        module: &Representation,
        strategy: Strategy,
    ) -> Result<FreeResolution> {
        let d = algebra.domain();
        if module.domain() != d {
            return Err(HomologyError::Unsupported(
                "module and algebra domains differ".into(),
            ));
        }
        let radical = match strategy {
            Strategy::Minimal => Some(radical_basis(algebra)?),
            Strategy::Greedy { .. } => None,
        };
        let dm = module.dim();
        let identity = Matrix::identity(d, dm);
        let action: Vec<Matrix> = algebra
            .generating_set()
            .into_iter()
            .map(|g| module.element_action(&algebra.basis_vector(g)))
            .collect();
        let rad_cols = radical.as_ref().map(|rad| {
            let mut cols = Vec::new();
            for i in 0..rad.cols() {
                let x: Vec<Scalar> = (0..rad.rows()).map(|r| rad.get(r, i)).collect();
                let act = module.element_action(&x);
                for j in 0..dm {
                    cols.push(act.column(j));
                }
            }
            cols
        });
        let chosen = choose_generators(
            d,
            dm,
            &identity,
            &strategy,
            rad_cols.as_deref(),
            |gi, v| action[gi].apply(v),
            action.len(),
        );
        let generators: Vec<Vec<Scalar>> = chosen.iter().map(|&j| identity.column(j)).collect();
        let n = algebra.dim();
        let t0 = generators.len();
        assert!(t0 > 0 || dm == 0, "a nonzero module needs generators");
        let basis_action: Vec<Matrix> = (0..n)
            .map(|b| module.element_action(&algebra.basis_vector(b)))
            .collect();
        let aug_cols: Vec<Vec<Scalar>> = (0..t0 * n)
            .map(|c| basis_action[c % n].apply(&generators[c / n]))
            .collect();
        let augmentation = Matrix::from_fn(d, dm, t0 * n, |r, c| aug_cols[c][r].clone());
        let kernel = matrix_kernel(&augmentation)?;
        let finished = kernel.cols() == 0;
        Ok(FreeResolution {
            strategy,
            radical,
            ranks: vec![t0],
            differentials: Vec::new(),
            augmentation,
            kernel,
            finished,
        })
    }

    /// Number of constructed terms minus one (the index of the last term).
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    /// True once the resolution has terminated (the last kernel is zero).
    pub fn finished(&self) -> bool {
        self.finished
    }

    /// Rank of term `k`; zero beyond the end of a terminated resolution.
    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    /// `d_k: A^{t_k} -> A^{t_{k-1}}` for `1 <= k <= length()`.
    pub fn differential(&self, k: usize) -> Option<&AlgebraMatrix> {
        if k == 0 {
            return None;
        }
        self.differentials.get(k - 1)
    }

    /// Scalar matrix of the augmentation `A^{t_0} -> M`.
    pub fn augmentation(&self) -> &Matrix {
        &self.augmentation
    }

    /// Kernel of the last constructed map, as flat columns.
    pub fn current_kernel(&self) -> &Matrix {
        &self.kernel
    }

    /// Extend until `length() >= length` or the resolution terminates.
    pub fn extend_to(&mut self, algebra: &Algebra, length: usize) -> Result<()> {
        while !self.finished && self.length() < length {
            self.extend_once(algebra)?;
        }
        Ok(())
    }

    fn extend_once(&mut self, algebra: &Algebra) -> Result<()> {
        let d = algebra.domain();
        let n = algebra.dim();
        let t = *self.ranks.last().unwrap();
        let width = t * n;
        let gen_idx = algebra.generating_set();
        let gen_mats: Vec<Matrix> = gen_idx
            .iter()
            .map(|&g| algebra.left_mult_matrix(&algebra.basis_vector(g)))
            .collect();
        let apply = |gi: usize, v: &[Scalar]| -> Vec<Scalar> {
            let mut out = Vec::with_capacity(width);
            for j in 0..t {
                out.extend(gen_mats[gi].apply(&v[j * n..(j + 1) * n]));
            }
            out
        };
        let rad_cols = self.radical.as_ref().map(|rad| {
            let mut cols = Vec::new();
            for i in 0..rad.cols() {
                let x: Vec<Scalar> = (0..rad.rows()).map(|r| rad.get(r, i)).collect();
                let left = algebra.left_mult_matrix(&x);
                for j in 0..self.kernel.cols() {
                    let col = self.kernel.column(j);
                    let mut out = Vec::with_capacity(width);
                    for b in 0..t {
                        out.extend(left.apply(&col[b * n..(b + 1) * n]));
                    }
                    cols.push(out);
                }
            }
            cols
        });
        let chosen = choose_generators(
            d,
            width,
            &self.kernel,
            &self.strategy,
            rad_cols.as_deref(),
            apply,
            gen_mats.len(),
        );
        let columns: Vec<Vec<Scalar>> = chosen.iter().map(|&j| self.kernel.column(j)).collect();
        let diff = AlgebraMatrix::from_free_columns(algebra, t, &columns);
        let scalar = diff.scalar_action(algebra);
        self.kernel = matrix_kernel(&scalar)?;
        self.finished = self.kernel.cols() == 0;
        self.ranks.push(columns.len());
        self.differentials.push(diff);
        Ok(())
    }

    /// Consistency checks: consecutive differentials compose to zero, and
    /// over a field each image has the rank of the kernel it must fill.
    pub fn verify(&self, algebra: &Algebra) -> Result<()> {
        let d = algebra.domain();
        let mut prev = self.augmentation.clone();
        for k in 0..self.differentials.len() {
            let scalar = self.differentials[k].scalar_action(algebra);
            if !prev.mul(&scalar).is_zero() {
                return Err(HomologyError::Internal(format!(
                    "differential {} does not compose to zero",
                    k + 1
                )));
            }
            if d.is_field() {
                let nullity_prev = prev.cols() - rref(&prev)?.rank;
                if rref(&scalar)?.rank != nullity_prev {
                    return Err(HomologyError::Internal(format!(
                        "resolution is not exact at term {k}"
                    )));
                }
            }
            prev = scalar;
        }
        Ok(())
    }
}

/// Pick generator column indices from `candidates`.
///
/// Greedy: walk the columns (optionally reversed), keep any not already in
/// the accumulated span, and close the span under the algebra action after
/// each kept column.
///
/// Minimal: seed the span with `rad * candidates` and keep columns that
/// still enlarge it — a basis of the head, which generates by Nakayama.
fn choose_generators(
    d: Domain,
    width: usize,
    candidates: &Matrix,
    strategy: &Strategy,
    radical_columns: Option<&[Vec<Scalar>]>,
    apply: impl Fn(usize, &[Scalar]) -> Vec<Scalar>,
    gen_count: usize,
) -> Vec<usize> {
    let mut ech = RowEchelon::new(d, width);
    let mut chosen = Vec::new();
    match strategy {
        Strategy::Minimal => {
            for col in radical_columns.expect("minimal strategy carries a radical") {
                ech.insert(col);
            }
            for j in 0..candidates.cols() {
                let col = candidates.column(j);
                if ech.insert(&col) {
                    chosen.push(j);
                }
            }
        }
        Strategy::Greedy { reverse_candidates } => {
            let order: Vec<usize> = if *reverse_candidates {
                (0..candidates.cols()).rev().collect()
            } else {
                (0..candidates.cols()).collect()
            };
            for j in order {
                let col = candidates.column(j);
                if ech.contains(&col) {
                    continue;
                }
                chosen.push(j);
                ech.insert(&col);
                let mut work = vec![col];
                while let Some(v) = work.pop() {
                    for gi in 0..gen_count {
                        let w = apply(gi, &v);
                        if ech.insert(&w) {
                            work.push(w);
                        }
                    }
                }
            }
        }
    }
    chosen
}

/// Kernel as columns: reduced row echelon over fields, saturated Smith
/// kernel over Z_(p) (which is the genuine kernel, since the target is
/// torsion-free).
fn matrix_kernel(m: &Matrix) -> Result<Matrix> {
    if m.domain().is_field() {
        Ok(rref(m)?.kernel)
    } else {
        Ok(smith_normal_form(m).kernel())
    }
}

/// The free module `A^rank` as an explicit representation (block-diagonal
/// left multiplications). Memory grows with `(rank * dim A)^2`; intended
/// for small sizes.
pub fn free_module(algebra: &Algebra, rank: usize) -> Representation {
    let d = algebra.domain();
    let n = algebra.dim();
    let action = (0..n)
        .map(|b| {
            let block = algebra.left_mult_matrix(&algebra.basis_vector(b));
            Matrix::from_fn(d, rank * n, rank * n, |r, c| {
                if r / n == c / n {
                    block.get(r % n, c % n)
                } else {
                    d.zero()
                }
            })
        })
        .collect();
    Representation::new(algebra, rank * n, action).expect("free module action is consistent")
}

/// The kernel of a map out of `A^rank`, turned into an explicit
/// representation on the kernel basis. Solves one linear system per algebra
/// basis element; intended for small sizes.
pub fn kernel_representation(
    algebra: &Algebra,
    rank: usize,
    kernel: &Matrix,
) -> Result<Representation> {
    let d = algebra.domain();
    let n = algebra.dim();
    assert_eq!(kernel.rows(), rank * n, "kernel height mismatch");
    let m = kernel.cols();
    let mut action = Vec::with_capacity(n);
    for b in 0..n {
        let left = algebra.left_mult_matrix(&algebra.basis_vector(b));
        let mapped = Matrix::from_fn(d, rank * n, m, |r, c| {
            let col = kernel.column(c);
            let block = r / n;
            left.apply(&col[block * n..(block + 1) * n])[r % n].clone()
        });
        let sol = if d.is_field() {
            solve_field(kernel, &mapped)?
        } else {
            smith_normal_form(kernel).solve(&mapped)
        }
        .ok_or_else(|| {
            HomologyError::Internal("kernel is not invariant under the action".into())
        })?;
        action.push(sol);
    }
    Ok(Representation::new(algebra, m, action)?)
}

/// True when the module is projective: the surjection from a free cover
/// splits as a module map (over Z_(p), splits integrally).
pub fn is_projective(algebra: &Algebra, module: &Representation) -> Result<bool> {
    let d = algebra.domain();
    let dm = module.dim();
    if dm == 0 {
        return Ok(true);
    }
    let res = FreeResolution::greedy(algebra, module)?;
    if res.current_kernel().cols() == 0 {
        // The cover is injective and surjective, so the module is free.
        return Ok(true);
    }
    let free = free_module(algebra, res.rank(0));
    let maps = qhc_algebra::hom_between(algebra, module, &free)?;
    if maps.is_empty() {
        return Ok(false);
    }
    // Solve sum c_i (aug . H_i) = identity.
    let aug = res.augmentation();
    let stacked = Matrix::from_fn(d, dm * dm, maps.len(), |r, c| {
        let composed = aug.mul(&maps[c]);
        composed.get(r / dm, r % dm)
    });
    let id_vec = Matrix::from_fn(d, dm * dm, 1, |r, _| {
        if r / dm == r % dm {
            d.one()
        } else {
            d.zero()
        }
    });
    let sol = if d.is_field() {
        solve_field(&stacked, &id_vec)?
    } else {
        smith_normal_form(&stacked).solve(&id_vec)
    };
    Ok(sol.is_some())
}

/// Projective dimension, or `None` when it exceeds `cap` (possibly
/// infinite). Small sizes only: each syzygy is materialized to run the
/// split test.
pub fn projective_dimension(
    algebra: &Algebra,
    module: &Representation,
    cap: usize,
) -> Result<Option<usize>> {
    if is_projective(algebra, module)? {
        return Ok(Some(0));
    }
    let mut res = FreeResolution::greedy(algebra, module)?;
    for k in 1..=cap {
        if res.current_kernel().cols() == 0 {
            return Ok(Some(k - 1));
        }
        let syzygy = kernel_representation(algebra, res.rank(res.length()), res.current_kernel())?;
        if is_projective(algebra, &syzygy)? {
            return Ok(Some(k));
        }
        res.extend_to(algebra, res.length() + 1)?;
    }
    Ok(None)
}

/// Largest projective dimension over all simple modules, or `None` when it
/// exceeds `cap`. Prime fields only (simples are found by block
/// decomposition).
pub fn global_dimension(algebra: &Algebra, cap: usize) -> Result<Option<usize>> {
    let mut best = 0usize;
    for s in qhc_algebra::simple_modules(algebra)? {
        match projective_dimension(algebra, &s, cap)? {
            Some(pd) => best = best.max(pd),
            None => return Ok(None),
        }
    }
    Ok(Some(best))
}
