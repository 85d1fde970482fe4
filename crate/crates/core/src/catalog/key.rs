use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde_json::{json, Value};

use super::{
    bso_model, bu_model, gr1c_absolute, gr1c_borel, gr2_borel, gr2_thom_minimal, gr2_thom_over_cpn, orbit_target,
    sections_borel, sections_closed_form, thom_complex_models, DzSign,
};
use crate::algebra::json::cdga_to_json;
use crate::algebra::{Cdga, Generator, Polynomial};
use crate::error::{Error, Result};
use crate::sections::RelativeModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Bu,
    Bso,
    CPn,
    Gr1cAbs,
    Gr1cBorel,
    ThomComplexRel,
    ThomComplexBorel,
    SectionsClosedForm,
    SectionsBorel,
    OrbitTarget,
    Gr2Borel,
    Gr2ThomMinimal,
    Gr2ThomIdeal,
    Gr2ThomOverCPn,
}

const FAMILIES: [(Family, &str); 14] = [
    (Family::Bu, "bu"),
    (Family::Bso, "bso"),
    (Family::CPn, "cpn"),
    (Family::Gr1cAbs, "gr1c-abs"),
    (Family::Gr1cBorel, "gr1c-borel"),
    (Family::ThomComplexRel, "thom-rel"),
    (Family::ThomComplexBorel, "thom-borel"),
    (Family::SectionsClosedForm, "sections"),
    (Family::SectionsBorel, "sections-borel"),
    (Family::OrbitTarget, "orbit-target"),
    (Family::Gr2Borel, "gr2-borel"),
    (Family::Gr2ThomMinimal, "gr2-thom-minimal"),
    (Family::Gr2ThomIdeal, "gr2-thom-ideal"),
    (Family::Gr2ThomOverCPn, "gr2-thom-over-cpn"),
];

impl Family {
    pub fn all() -> impl Iterator<Item = Family> {
        FAMILIES.iter().map(|(f, _)| *f)
    }

    pub fn as_str(&self) -> &'static str {
        FAMILIES.iter().find(|(f, _)| f == self).expect("listed").1
    }

    pub fn needs_degree(&self) -> bool {
        matches!(self, Family::SectionsClosedForm | Family::SectionsBorel)
    }

    pub fn min_n(&self) -> u32 {
        match self {
            Family::Gr1cAbs | Family::Gr1cBorel | Family::Bso => 2,
            Family::Gr2Borel | Family::Gr2ThomMinimal | Family::Gr2ThomIdeal | Family::Gr2ThomOverCPn => 2,
            _ => 1,
        }
    }
}

/// `family:n=3` or `family:n=2,d=3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogKey {
    pub family: Family,
    pub n: u32,
    pub d: Option<i64>,
}

impl CatalogKey {
    pub fn new(family: Family, n: u32, d: Option<i64>) -> Result<Self> {
        if n < family.min_n() {
            return Err(Error::Parameter(format!("{} needs n >= {}", family.as_str(), family.min_n())));
        }
        match (family.needs_degree(), d) {
            (true, None) => Err(Error::Parameter(format!("{} needs a degree d", family.as_str()))),
            (false, Some(_)) => Err(Error::Parameter(format!("{} takes no degree", family.as_str()))),
            _ => Ok(CatalogKey { family, n, d }),
        }
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={}", self.family.as_str(), self.n)?;
        if let Some(d) = self.d {
            write!(f, ",d={d}")?;
        }
        Ok(())
    }
}

impl FromStr for CatalogKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownKey(s.to_string());
        let (fam, params) = s.split_once(':').ok_or_else(unknown)?;
        let family = FAMILIES.iter().find(|(_, k)| *k == fam).ok_or_else(unknown)?.0;
        let (mut n, mut d) = (None, None);
        for part in params.split(',') {
            match part.split_once('=') {
                Some(("n", v)) if n.is_none() => n = Some(v.parse::<u32>().map_err(|_| unknown())?),
                Some(("d", v)) if d.is_none() => d = Some(v.parse::<i64>().map_err(|_| unknown())?),
                _ => return Err(unknown()),
            }
        }
        CatalogKey::new(family, n.ok_or_else(unknown)?, d)
    }
}

/// A catalog model: the algebra, the names of its base generators when it
/// is relative, and the ideal generator for `A[g] ⊕ Q` models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: CatalogKey,
    pub algebra: Cdga,
    pub base: Vec<String>,
    pub ideal_generator: Option<String>,
}

impl CatalogEntry {
    fn plain(key: CatalogKey, algebra: Cdga) -> Self {
        CatalogEntry {
            key,
            algebra,
            base: Vec::new(),
            ideal_generator: None,
        }
    }

    fn relative(key: CatalogKey, rm: RelativeModel) -> Self {
        CatalogEntry {
            key,
            base: rm.base().generators().iter().map(|g| g.name().to_string()).collect(),
            algebra: rm.total().clone(),
            ideal_generator: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = cdga_to_json(&self.algebra);
        let obj = v.as_object_mut().expect("object");
        obj.insert("key".into(), json!(self.key.to_string()));
        if !self.base.is_empty() {
            obj.insert("base".into(), json!(self.base));
        }
        if let Some(g) = &self.ideal_generator {
            obj.insert("idealGenerator".into(), json!(g));
        }
        v
    }
}

fn cpn(n: u32) -> Result<Cdga> {
    let b = Generator::new("b", 2);
    let y = Generator::new("y", 2 * n as i32 + 1);
    Cdga::new(vec![b.clone(), y], [("y".to_string(), Polynomial::gen(&b).pow(n + 1))])
}

pub fn build(key: &CatalogKey, dz: DzSign) -> Result<CatalogEntry> {
    let n = key.n;
    let d = key.d.unwrap_or_default();
    let k = *key;
    Ok(match key.family {
        Family::Bu => CatalogEntry::plain(k, bu_model(n)),
        Family::Bso => CatalogEntry::plain(k, bso_model(n)?),
        Family::CPn => CatalogEntry::plain(k, cpn(n)?),
        Family::Gr1cAbs => CatalogEntry::plain(k, gr1c_absolute(n)?),
        Family::Gr1cBorel => CatalogEntry::relative(k, gr1c_borel(n)?),
        Family::ThomComplexRel => CatalogEntry::relative(k, thom_complex_models(n)?.rel),
        Family::ThomComplexBorel => CatalogEntry::relative(k, thom_complex_models(n)?.borel),
        Family::SectionsClosedForm => CatalogEntry::plain(k, sections_closed_form(n, d)?),
        Family::SectionsBorel => {
            let mut e = CatalogEntry::plain(k, sections_borel(n, d)?);
            e.base = bu_model(n + 1).generators().iter().map(|g| g.name().to_string()).collect();
            e
        }
        Family::OrbitTarget => CatalogEntry::plain(k, orbit_target(n)),
        Family::Gr2Borel => CatalogEntry::relative(k, gr2_borel(n)?),
        Family::Gr2ThomMinimal => CatalogEntry::relative(k, gr2_thom_minimal(n, dz)?),
        Family::Gr2ThomIdeal => {
            let mut e = CatalogEntry::relative(k, gr2_borel(n)?);
            e.ideal_generator = Some("ehat".into());
            e
        }
        Family::Gr2ThomOverCPn => CatalogEntry::relative(k, gr2_thom_over_cpn(n, dz, None)?),
    })
}

type Memo = RwLock<HashMap<(CatalogKey, DzSign), Arc<Value>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn cache_file(key: &CatalogKey, dz: DzSign) -> Option<PathBuf> {
    let dir = std::env::var_os("RHT_CACHE_DIR")?;
    let name = format!("{key}.{dz}.json").replace([':', ',', '='], "_");
    Some(PathBuf::from(dir).join(name))
}

/// JSON of a catalog model, memoised in-process and, when `RHT_CACHE_DIR`
/// is set, on disk.
pub fn cached_json(key: &CatalogKey, dz: DzSign) -> Result<Arc<Value>> {
    if let Some(v) = memo().read().expect("memo lock").get(&(*key, dz)) {
        return Ok(v.clone());
    }
    let file = cache_file(key, dz);
    let from_disk = file
        .as_ref()
        .and_then(|f| std::fs::read_to_string(f).ok())
        .and_then(|s| serde_json::from_str::<Value>(&s).ok());
    let value = match from_disk {
        Some(v) => v,
        None => {
            let v = build(key, dz)?.to_json();
            if let Some(f) = &file {
                // the cache is an optimisation; failing to write it is not an error
                let _ = std::fs::write(f, serde_json::to_string_pretty(&v).expect("serialisable"));
            }
            v
        }
    };
    let value = Arc::new(value);
    memo().write().expect("memo lock").insert((*key, dz), value.clone());
    Ok(value)
}
