//! Parsing of type labels, coweights, automorphisms, elements and classes.

use std::sync::Arc;

use wqbg_core::coxeter::parse_word;
use wqbg_core::{
    AffineElement, AffineGroup, Automorphism, Basis, CoxeterGroup, Coweight, EnumeratedGroup, LatticeKind,
    QuantumBruhatGraph, RootDatum, SigmaConjClass, TypeLabel, Q,
};

use crate::cache;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

/// A parsed `--type` with lazily built group data.
pub struct TypeCtx {
    pub label: TypeLabel,
    pub group: CoxeterGroup,
    pub lattice: LatticeKind,
}

impl TypeCtx {
    pub fn new(label: &str, lattice: LatticeKind) -> CliResult<Self> {
        let label: TypeLabel = label.parse()?;
        let group = CoxeterGroup::from_label(&label.cartan.to_string())?;
        Ok(TypeCtx { label, group, lattice })
    }

    pub fn name(&self) -> String {
        self.label.cartan.to_string()
    }

    pub fn datum(&self) -> CliResult<Arc<RootDatum>> {
        Ok(Arc::new(RootDatum::new(self.group.roots().clone(), self.lattice)?))
    }

    /// `--sigma` if given, else the twist of the label, else the identity.
    pub fn sigma(&self, s: Option<&str>) -> CliResult<Automorphism> {
        match (s, self.label.twist) {
            (Some(s), _) => Ok(Automorphism::parse(s, &self.group)?),
            (None, Some(k)) => Ok(Automorphism::standard_twist(self.group.roots(), k)?),
            (None, None) => Ok(Automorphism::identity(self.group.rank())),
        }
    }

    pub fn enumerate(&self, cfg: &RunConfig) -> CliResult<Arc<EnumeratedGroup>> {
        Ok(Arc::new(EnumeratedGroup::new(self.group.clone(), cfg.budget)?))
    }

    /// Group and quantum Bruhat graph, going through the cache directory when set.
    pub fn graph(&self, cfg: &RunConfig) -> CliResult<QuantumBruhatGraph> {
        if let Some(dir) = &cfg.cache_dir {
            let path = dir.join(format!("{}.wqbg", self.name()));
            if path.exists() {
                let (_, q) = cache::load(&path)?;
                return Ok(q);
            }
            let q = QuantumBruhatGraph::build_generalized(self.enumerate(cfg)?)?;
            std::fs::create_dir_all(dir)?;
            cache::save(&path, &self.name(), &q)?;
            return Ok(q);
        }
        Ok(QuantumBruhatGraph::build_generalized(self.enumerate(cfg)?)?)
    }

    pub fn affine(&self, cfg: &RunConfig) -> CliResult<(AffineGroup, QuantumBruhatGraph)> {
        if !self.group.roots().is_crystallographic() {
            return Err(wqbg_core::Error::NotCrystallographic("the affine Weyl group".into()).into());
        }
        let q = self.graph(cfg)?;
        let aff = AffineGroup::new(self.datum()?, q.group_arc())?;
        Ok((aff, q))
    }

    pub fn word(&self, s: &str) -> CliResult<wqbg_core::GroupElement> {
        Ok(self.group.from_word(&parse_word(s, self.group.rank())?))
    }
}

pub fn parse_lattice(s: &str) -> CliResult<LatticeKind> {
    Ok(s.parse::<LatticeKind>()?)
}

pub fn parse_basis(s: &str) -> CliResult<Basis> {
    Ok(s.parse::<Basis>()?)
}

/// Coordinates separated by commas or spaces, optionally wrapped in brackets.
pub fn parse_coords(s: &str) -> CliResult<Vec<Q>> {
    s.trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .split([',', ' '])
        .filter(|x| !x.is_empty())
        .map(|x| {
            wqbg_core::scalar::parse_q(x).ok_or_else(|| CliError::Usage(format!("bad coordinate `{x}`")))
        })
        .collect()
}

/// An integral lattice coweight given in any basis.
pub fn parse_mu(s: &str, datum: &RootDatum, basis: Basis) -> CliResult<Vec<i64>> {
    let cw = Coweight::new(parse_coords(s)?, basis);
    datum
        .to_lattice(&cw)?
        .to_ints()
        .ok_or_else(|| CliError::Usage(format!("`{s}` is not an integral lattice coweight")))
}

pub fn parse_element(s: &str, aff: &AffineGroup) -> CliResult<AffineElement> {
    Ok(aff.parse(s)?)
}

pub fn parse_class(s: &str, datum: &RootDatum) -> CliResult<SigmaConjClass> {
    Ok(SigmaConjClass::parse(s, datum)?)
}
