//! Presentations of modules by generators and relations, with enough
//! provenance to evaluate homomorphisms without ever materializing the
//! action on large modules. A module sitting inside an ambient module (for
//! example a syzygy inside a direct sum of projectives) is presented by
//! closing generator seeds under the ambient action while recording how
//! each spanning vector arose; a homomorphism is then determined by its
//! values on the generators, subject to one linear constraint per relation.

use qhc_linalg::{smith_normal_form, solve_field, Matrix, RowEchelon, Scalar};

use crate::module::{kernel_columns, Representation};
use crate::{Algebra, AlgebraError};

/// How a spanning vector of the presented module arose during closure.
#[derive(Debug, Clone, Copy)]
enum SpanSource {
    /// A generator seed; the payload is the generator index.
    Root(usize),
    /// `action_of(basis_elt)` applied to the spanning vector at `parent`
    /// (always an earlier index).
    Step { basis_elt: usize, parent: usize },
}

/// A module presented as `A^t / (relations)`, together with provenance data
/// for evaluating homomorphisms out of it in the coordinates of the original
/// basis.
pub struct Presentation {
    /// Rank of the presented module over the coefficient domain.
    module_rank: usize,
    /// Number of module generators `t`.
    gen_count: usize,
    /// Provenance of each recorded spanning vector, in insertion order.
    sources: Vec<SpanSource>,
    /// Generating relations: each has `t` slots holding algebra-element
    /// coordinates `a_i`, meaning `sum_i a_i . g_i = 0`.
    relations: Vec<Vec<Vec<Scalar>>>,
    /// `spanning_count x module_rank`; column `k` expresses the `k`-th basis
    /// vector of the module as a combination of the spanning vectors.
    basis_in_spanning: Matrix,
}

impl Presentation {
    pub fn module_rank(&self) -> usize {
        self.module_rank
    }

    pub fn generator_count(&self) -> usize {
        self.gen_count
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn relations(&self) -> &[Vec<Vec<Scalar>>] {
        &self.relations
    }
}

/// Present the whole module `m` (its basis is the ambient basis).
pub fn present_module(
    algebra: &Algebra,
    m: &Representation,
) -> Result<Presentation, AlgebraError> {
    present_with(algebra, m, None, &[])
}

/// Present the submodule spanned by the columns of `basis` (which must be
/// independent and span an invariant lattice) inside `ambient`.
pub fn present_submodule(
    algebra: &Algebra,
    ambient: &Representation,
    basis: &Matrix,
) -> Result<Presentation, AlgebraError> {
    present_with(algebra, ambient, Some(basis), &[])
}

/// Present with extra priority seeds tried before the basis columns; a good
/// hint (for example the unit of the regular module) keeps the generator
/// count minimal.
pub fn present_with(
    algebra: &Algebra,
    ambient: &Representation,
    basis: Option<&Matrix>,
    hint_seeds: &[Vec<Scalar>],
) -> Result<Presentation, AlgebraError> {
    let d = ambient.domain();
    let n_amb = ambient.dim();
    if let Some(b) = basis {
        assert_eq!(b.rows(), n_amb, "basis height mismatch");
    }
    let module_rank = basis.map(|b| b.cols()).unwrap_or(n_amb);
    let agens = algebra.generating_set();
    let gen_actions: Vec<&Matrix> = agens.iter().map(|&g| ambient.action_of(g)).collect();

    // Closure with provenance. Spanning vectors are recorded unreduced so a
    // homomorphism can later be pushed along the same multiplication steps.
    let mut ech = RowEchelon::new(d, n_amb);
    let mut spanning: Vec<Vec<Scalar>> = Vec::new();
    let mut sources: Vec<SpanSource> = Vec::new();
    let mut module_gens: Vec<Vec<Scalar>> = Vec::new();
    let basis_col = |j: usize| -> Vec<Scalar> {
        match basis {
            Some(b) => (0..n_amb).map(|r| b.get(r, j)).collect(),
            None => {
                let mut v = vec![d.zero(); n_amb];
                v[j] = d.one();
                v
            }
        }
    };
    let seeds: Vec<Vec<Scalar>> = hint_seeds
        .iter()
        .cloned()
        .chain((0..module_rank).map(basis_col))
        .collect();
    for seed in seeds {
        if ech.contains(&seed) {
            continue;
        }
        let g = module_gens.len();
        module_gens.push(seed.clone());
        let mut work: Vec<(Vec<Scalar>, SpanSource)> = vec![(seed, SpanSource::Root(g))];
        while let Some((v, src)) = work.pop() {
            if !ech.insert(&v) {
                continue;
            }
            let idx = spanning.len();
            spanning.push(v);
            sources.push(src);
            for (gi, ga) in gen_actions.iter().enumerate() {
                let moved = ga.apply(&spanning[idx]);
                work.push((moved, SpanSource::Step { basis_elt: agens[gi], parent: idx }));
            }
        }
    }
    let t = module_gens.len();
    let dim_a = algebra.dim();

    // Relations: kernel of the evaluation A^t -> module, then an A-module
    // generating cover of that kernel under the diagonal action.
    let mut eval_cols: Vec<Vec<Scalar>> = Vec::with_capacity(t * dim_a);
    for g in &module_gens {
        for j in 0..dim_a {
            eval_cols.push(ambient.action_of(j).apply(g));
        }
    }
    let eval = Matrix::from_fn(d, n_amb, t * dim_a, |r, c| eval_cols[c][r].clone());
    drop(eval_cols);
    let kernel = kernel_columns(&eval)?;
    let left_mults: Vec<Matrix> = agens
        .iter()
        .map(|&g| algebra.left_mult_matrix(&algebra.basis_vector(g)))
        .collect();
    let mut relations: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut ech_k = RowEchelon::new(d, t * dim_a);
    for kcol in 0..kernel.cols() {
        let k: Vec<Scalar> = (0..kernel.rows()).map(|r| kernel.get(r, kcol)).collect();
        if ech_k.contains(&k) {
            continue;
        }
        relations.push(k.chunks(dim_a).map(|c| c.to_vec()).collect());
        let mut work = vec![k];
        while let Some(v) = work.pop() {
            if !ech_k.insert(&v) {
                continue;
            }
            for lm in &left_mults {
                // diagonal action: multiply every slot on the left
                let mut moved = Vec::with_capacity(t * dim_a);
                for chunk in v.chunks(dim_a) {
                    moved.extend(lm.apply(chunk));
                }
                work.push(moved);
            }
        }
    }

    // Express the module basis in the spanning vectors.
    let span_mat = Matrix::from_fn(d, n_amb, spanning.len(), |r, c| spanning[c][r].clone());
    let basis_mat = match basis {
        Some(b) => b.clone(),
        None => Matrix::identity(d, n_amb),
    };
    let basis_in_spanning = if d.is_field() {
        solve_field(&span_mat, &basis_mat)?
    } else {
        smith_normal_form(&span_mat).solve(&basis_mat)
    }
    .ok_or_else(|| {
        AlgebraError::NotInvariant(
            "closure of the given basis does not recover it; the span is not an invariant lattice"
                .into(),
        )
    })?;

    Ok(Presentation {
        module_rank,
        gen_count: t,
        sources,
        relations,
        basis_in_spanning,
    })
}

/// A basis of the space of module homomorphisms from a presented module into
/// `target`, as matrices acting on the presented module's coordinates. Over
/// Z_(p) the returned maps are a lattice basis of all maps defined over the
/// local ring.
pub fn hom_space(
    source: &Presentation,
    target: &Representation,
) -> Result<Vec<Matrix>, AlgebraError> {
    let d = target.domain();
    let t = source.gen_count;
    let dl = target.dim();
    if t == 0 || dl == 0 {
        return Ok(Vec::new());
    }
    // Unknowns: the images u_1..u_t of the generators; one block row of
    // constraints per relation.
    let solutions = if source.relations.is_empty() {
        Matrix::identity(d, t * dl)
    } else {
        let mut block_rows = Vec::with_capacity(source.relations.len());
        for rel in &source.relations {
            let blocks: Vec<Matrix> = rel.iter().map(|a| target.element_action(a)).collect();
            let mut row = blocks[0].clone();
            for b in &blocks[1..] {
                row = row.hstack(b);
            }
            block_rows.push(row);
        }
        let mut constraint = block_rows[0].clone();
        for r in &block_rows[1..] {
            constraint = constraint.vstack(r);
        }
        kernel_columns(&constraint)?
    };
    let mut maps = Vec::with_capacity(solutions.cols());
    for s in 0..solutions.cols() {
        let u: Vec<Vec<Scalar>> = (0..t)
            .map(|i| (0..dl).map(|r| solutions.get(i * dl + r, s)).collect())
            .collect();
        // Push the generator images along the recorded closure steps.
        let mut span_images: Vec<Vec<Scalar>> = Vec::with_capacity(source.sources.len());
        for src in &source.sources {
            let img = match *src {
                SpanSource::Root(g) => u[g].clone(),
                SpanSource::Step { basis_elt, parent } => {
                    target.action_of(basis_elt).apply(&span_images[parent])
                }
            };
            span_images.push(img);
        }
        let fs = Matrix::from_fn(d, dl, span_images.len(), |r, c| span_images[c][r].clone());
        maps.push(fs.mul(&source.basis_in_spanning));
    }
    Ok(maps)
}

/// Dimension (free rank over Z_(p)) of the homomorphism space.
pub fn hom_rank(source: &Presentation, target: &Representation) -> Result<usize, AlgebraError> {
    Ok(hom_space(source, target)?.len())
}

/// Intertwiners between two modules computed by presenting the source first;
/// convenience for small contexts.
pub fn hom_between(
    algebra: &Algebra,
    source: &Representation,
    target: &Representation,
) -> Result<Vec<Matrix>, AlgebraError> {
    let pres = present_module(algebra, source)?;
    hom_space(&pres, target)
}
