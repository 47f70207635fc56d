//! Parameters shared by the subcommands: parabolic subsets, generator maps,
//! triples and weights.

use anyhow::{bail, Context};
use clap::Args;
use cox_core::hecke::WeightFunction;
use cox_core::pieces::{AdmissibleTriple, PairSpace};
use cox_core::{CoxeterGroup, GenMap, GenSet};

#[derive(Args, Debug, Default, Clone)]
pub struct Params {
    /// Parabolic subset `J` of the acting subgroup, e.g. `1,2`.
    #[arg(long = "J")]
    pub j: Option<String>,
    /// Image `J'` of `J` under `--delta`.
    #[arg(long = "Jp")]
    pub jp: Option<String>,
    /// Generator map, e.g. `1:2,2:3`, or `id`.
    #[arg(long)]
    pub delta: Option<String>,
    /// Twisting automorphism of the whole group (default: the one attached to the type).
    #[arg(long)]
    pub sigma: Option<String>,
    /// `J₁` of the triple `c = (J₁, J₂, δ)` for the two-sided action.
    #[arg(long = "J1")]
    pub j1: Option<String>,
    /// `J₂` of `c`.
    #[arg(long = "J2")]
    pub j2: Option<String>,
    /// `J'₁` of the second triple `c'` (default: `c' = (I, I, id)`).
    #[arg(long = "J1p")]
    pub j1p: Option<String>,
    /// `J'₂` of `c'`.
    #[arg(long = "J2p")]
    pub j2p: Option<String>,
    /// `δ'` of `c'`.
    #[arg(long)]
    pub deltap: Option<String>,
    /// Second factor `W₂` of the two-sided action (default: the same group).
    #[arg(long)]
    pub with: Option<String>,
    /// Weight function `L(s_1),...,L(s_n)` (default: all 1).
    #[arg(long)]
    pub weights: Option<String>,
}

pub fn group(group_type: &str) -> anyhow::Result<CoxeterGroup> {
    CoxeterGroup::parse(group_type).with_context(|| format!("cannot build group `{group_type}`"))
}

/// `σ` from `--sigma`, else the automorphism attached to the type.
pub fn sigma(g: &CoxeterGroup, s: Option<&str>) -> anyhow::Result<GenMap> {
    let n = g.rank();
    match s {
        None => Ok(g.system().automorphism().clone()),
        Some(s) => {
            let m = GenMap::parse(s, n, n, g.full_set())?;
            g.system().check_automorphism(&m)?;
            Ok(m)
        }
    }
}

impl Params {
    pub fn is_pair(&self) -> bool {
        self.j1.is_some() || self.j2.is_some() || self.with.is_some() || self.deltap.is_some()
    }

    /// `δ : J → J'` for the action of `W_J` on `W`. Without `--J` and `--delta`
    /// this is `σ` on the whole generating set.
    pub fn delta(&self, g: &CoxeterGroup) -> anyhow::Result<GenMap> {
        let n = g.rank();
        if self.j.is_none() && self.delta.is_none() {
            if self.jp.is_some() {
                bail!("--Jp needs --J or --delta");
            }
            return sigma(g, self.sigma.as_deref());
        }
        if self.sigma.is_some() {
            bail!("--sigma cannot be combined with --J/--delta");
        }
        let j = match &self.j {
            Some(s) => GenSet::parse(s, n)?,
            None => g.full_set(),
        };
        let d = match &self.delta {
            Some(s) => GenMap::parse(s, n, n, j)?,
            None => GenMap::identity_on(j, n),
        };
        if self.j.is_some() && d.domain() != j {
            bail!("--delta is defined on {}, but --J is {}", d.domain(), j);
        }
        if let Some(jp) = &self.jp {
            let jp = GenSet::parse(jp, n)?;
            if d.image() != jp {
                bail!("--delta maps onto {}, but --Jp is {}", d.image(), jp);
            }
        }
        if !g.system().matrix().preserves(g.system().matrix(), &d) {
            bail!("--delta {d} does not preserve bond orders");
        }
        Ok(d)
    }

    pub fn weight(&self, g: &CoxeterGroup) -> anyhow::Result<WeightFunction> {
        match &self.weights {
            None => Ok(WeightFunction::equal(g)),
            Some(s) => {
                let values = s
                    .split(',')
                    .map(|x| x.trim().parse::<i32>().with_context(|| format!("bad weight `{x}`")))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                Ok(WeightFunction::new(g, values)?)
            }
        }
    }

    /// The second group of the two-sided action.
    pub fn second(&self) -> anyhow::Result<Option<CoxeterGroup>> {
        self.with.as_deref().map(group).transpose()
    }

    /// The pair space for `--J1/--J2/--delta` (and primed versions), or the
    /// specialisation to the `W_J`-action on `W` otherwise.
    pub fn pair_space<'g>(&self, g1: &'g CoxeterGroup, g2: &'g CoxeterGroup) -> anyhow::Result<PairSpace<'g>> {
        if !self.is_pair() {
            return Ok(PairSpace::for_parabolic_action(g1, self.delta(g1)?)?);
        }
        let (s1, s2) = (g1.system(), g2.system());
        let c = AdmissibleTriple::parse(
            s1,
            s2,
            self.j1.as_deref().unwrap_or(""),
            self.j2.as_deref().unwrap_or(""),
            self.delta.as_deref().unwrap_or(""),
        )?;
        let cp = if self.j1p.is_none() && self.j2p.is_none() && self.deltap.is_none() {
            if s1.matrix() != s2.matrix() {
                bail!("--J1p/--J2p/--deltap are required when the two groups differ");
            }
            AdmissibleTriple::identity(s1)
        } else {
            AdmissibleTriple::parse(
                s1,
                s2,
                self.j1p.as_deref().unwrap_or(""),
                self.j2p.as_deref().unwrap_or(""),
                self.deltap.as_deref().unwrap_or(""),
            )?
        };
        Ok(PairSpace::new(g1, g2, c, cp)?)
    }

    /// Scope string: the group label followed by the parameters that were given.
    pub fn scope(&self, g: &CoxeterGroup) -> String {
        let mut s = g.system().label().to_string();
        let mut add = |k: &str, v: &Option<String>| {
            if let Some(v) = v {
                s.push_str(&format!(" {k}={v}"));
            }
        };
        add("with", &self.with);
        add("J", &self.j);
        add("Jp", &self.jp);
        add("J1", &self.j1);
        add("J2", &self.j2);
        add("delta", &self.delta);
        add("J1p", &self.j1p);
        add("J2p", &self.j2p);
        add("deltap", &self.deltap);
        add("sigma", &self.sigma);
        add("weights", &self.weights);
        s
    }
}
