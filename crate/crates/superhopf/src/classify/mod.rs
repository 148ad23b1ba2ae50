//! Automorphisms, orbits on super-data, presentation matching, and the
//! table-by-table classification run.

mod report;

pub use report::{
    render_report, run_classification, CandidateReport, ClassRow, ClassificationReport, PairingRow, RepresentativeRow,
};

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{AnalysisError, Character, SuperDatum};
use crate::bosonize::{BosonizeError, Coinvariants};
use crate::catalog::presentation::extend_generator_map;
use crate::catalog::tables::{expand_label, parse_scalar, AutoSpec, Num, TermSpec};
use crate::catalog::{CatalogError, Presented};
use crate::field::RootField;
use crate::hopfcore::{check_morphism, HopfSuperAlgebra};
use crate::linalg::{dot, zero_vec, Frame, LinearMap, Vector};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Bosonize(#[from] BosonizeError),
    #[error("{0}")]
    Data(String),
    #[error("generator assignment does not extend: {0}")]
    Extension(String),
}

/// A verified (or refuted) automorphism given on presentation generators.
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismSpec<F> {
    pub name: String,
    pub parent: String,
    /// Value of the family parameter this instance was sampled at.
    pub sample: Option<String>,
    #[serde(skip)]
    pub group_images: Vec<Vector<F>>,
    #[serde(skip)]
    pub skew_images: Vec<Vector<F>>,
    #[serde(skip)]
    pub map: LinearMap<F>,
    pub verified: bool,
    pub expect_valid: bool,
    pub family: bool,
    pub failure: Option<String>,
}

/// Σ c·label over the basis labels of `h`; labels may carry `{expr}` in p.
pub fn parse_element<F: RootField>(
    h: &HopfSuperAlgebra<F>,
    terms: &TermSpec,
    p: u64,
    param: Option<(&str, &F)>,
) -> Result<Vector<F>, ClassifyError> {
    let mut v = zero_vec(h.dim());
    for (s, label) in terms {
        let l = expand_label(label, p)?;
        let i = h.index_of(&l).ok_or_else(|| ClassifyError::Data(format!("no basis element '{}'", l)))?;
        v[i] += &parse_scalar(s, p, param)?;
    }
    Ok(v)
}

/// Extends images of the generators of `source` into `target` and checks
/// the result is a Hopf isomorphism.
pub fn match_presentation<F: RootField>(
    source: &Presented<F>,
    target: &HopfSuperAlgebra<F>,
    group_images: &[Vector<F>],
    skew_images: &[Vector<F>],
) -> Result<LinearMap<F>, ClassifyError> {
    let p = source
        .presentation
        .as_ref()
        .ok_or_else(|| ClassifyError::Data(format!("{} has no presentation", source.name)))?;
    if group_images.len() != p.group.rank() || skew_images.len() != p.theta() {
        return Err(ClassifyError::Data(format!(
            "{} needs {} group and {} skew images",
            source.name,
            p.group.rank(),
            p.theta()
        )));
    }
    let cols =
        extend_generator_map(p, target.dim(), target.unit(), |x, y| target.mul(x, y), group_images, skew_images);
    let f = LinearMap::from_images(&cols, target.dim());
    check_morphism(&source.hopf, target, &f, true).map_err(|e| ClassifyError::Extension(e.to_string()))?;
    Ok(f)
}

/// Coordinates of an element of A in the chosen basis of the coinvariants.
pub fn to_coinvariant_coords<F: RootField>(co: &Coinvariants<F>, v: &Vector<F>) -> Option<Vector<F>> {
    let vecs: Vec<Vector<F>> = (0..co.hopf.dim()).map(|i| co.inclusion.image_of_basis(i)).collect();
    Frame::new(vecs, co.inclusion.target)?.coordinates(v)
}

/// Builds and verifies every automorphism spec; families are sampled at
/// u = −1 and u = 2.
pub fn verify_automorphisms<F: RootField>(
    a: &Presented<F>,
    specs: &[AutoSpec],
    p: u64,
) -> Result<Vec<AutomorphismSpec<F>>, ClassifyError> {
    let mut out = vec![];
    for s in specs {
        let samples: Vec<Option<(String, F)>> = match &s.family {
            Some(_) => vec![Some(("-1".into(), -F::one())), Some(("2".into(), F::from_i64(2)))],
            None => vec![None],
        };
        for sample in samples {
            let param = s.family.as_deref().zip(sample.as_ref().map(|(_, v)| v));
            let group_images =
                s.group.iter().map(|t| parse_element(&a.hopf, t, p, param)).collect::<Result<Vec<_>, _>>()?;
            let skew_images =
                s.skew.iter().map(|t| parse_element(&a.hopf, t, p, param)).collect::<Result<Vec<_>, _>>()?;
            let (map, verified, failure) = match match_presentation(a, &a.hopf, &group_images, &skew_images) {
                Ok(f) => (f, true, None),
                Err(e) => (LinearMap::identity(a.hopf.dim()), false, Some(e.to_string())),
            };
            out.push(AutomorphismSpec {
                name: s.name.clone(),
                parent: a.name.clone(),
                sample: sample.map(|(l, _)| l),
                group_images,
                skew_images,
                map,
                verified,
                expect_valid: s.expect_valid,
                family: s.family.is_some(),
                failure,
            });
        }
    }
    Ok(out)
}

/// The permutation of `sd` induced by φ: (g, α) ↦ (φ(g), α∘φ⁻¹).
/// None if some image leaves the list.
pub fn induced_permutation<F: RootField>(sd: &[SuperDatum<F>], phi: &LinearMap<F>) -> Option<Vec<usize>> {
    let inv = phi.inverse()?;
    let n = phi.source;
    sd.iter()
        .map(|d| {
            let g = phi.apply(&d.g_vec);
            let alpha: Vector<F> = (0..n).map(|k| dot(&d.alpha_values, &inv.image_of_basis(k))).collect();
            sd.iter().position(|e| e.g_vec == g && e.alpha_values == alpha)
        })
        .collect()
}

/// Orbits of the group generated by the verified automorphisms, as sorted
/// index lists ordered by their first element.
pub fn orbits<F: RootField>(sd: &[SuperDatum<F>], autos: &[AutomorphismSpec<F>]) -> Result<Vec<Vec<usize>>, ClassifyError> {
    let mut parent: Vec<usize> = (0..sd.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in autos.iter().filter(|a| a.verified) {
        let perm = induced_permutation(sd, &a.map)
            .ok_or_else(|| ClassifyError::Data(format!("{} does not preserve the super-data", a.name)))?;
        for (i, &j) in perm.iter().enumerate() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = vec![];
    for i in 0..sd.len() {
        let r = find(&mut parent, i);
        match out.iter_mut().find(|o| o[0] == r) {
            Some(o) => o.push(i),
            None => out.push(vec![i]),
        }
    }
    Ok(out)
}

/// The character of a presented algebra with the given exponents on the
/// group generators (ζ_{n_j}^{e_j}) and zero on skew generators.
pub fn named_character<F: RootField>(a: &Presented<F>, exps: &[Num], p: u64) -> Result<Vector<F>, ClassifyError> {
    let pres = a.presentation.as_ref().ok_or_else(|| ClassifyError::Data(format!("{} has no presentation", a.name)))?;
    let e = exps.iter().map(|n| n.eval(p)).collect::<Result<Vec<_>, _>>()?;
    if e.len() != pres.group.rank() {
        return Err(ClassifyError::Data(format!("character needs {} exponents", pres.group.rank())));
    }
    let gens: Vec<F> = pres
        .group
        .factors
        .iter()
        .zip(&e)
        .map(|(&n, &k)| F::zeta(n, k).ok_or_else(|| ClassifyError::Data(format!("ζ_{} unavailable", n))))
        .collect::<Result<_, _>>()?;
    Ok((0..pres.dim())
        .map(|idx| {
            let (g, x) = pres.split(idx);
            if x.iter().any(|&k| k > 0) {
                return F::zero();
            }
            pres.group.element(g).iter().zip(&gens).fold(F::one(), |acc, (&k, v)| {
                let mut t = acc;
                for _ in 0..k {
                    t = t.mul_ref(v);
                }
                t
            })
        })
        .collect())
}

/// Index of a character by its values.
pub fn character_index<F: RootField>(chars: &[Character<F>], values: &[F]) -> Option<usize> {
    chars.iter().position(|c| c.values.as_slice() == values)
}
