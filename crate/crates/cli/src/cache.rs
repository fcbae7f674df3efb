use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hecke_core::invariants::ClosureTrace;
use hecke_core::{PolyJson, TracePoly, WeavingSpec};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CachedTrace {
    version: u32,
    kind: String,
    #[serde(rename = "N")]
    big_n: usize,
    m: usize,
    n: usize,
    e: i64,
    trace: PolyJson,
}

/// On-disk store of weaving traces keyed by `(N, m)`. Writes go through a
/// temporary file and a rename, so readers never see a partial entry.
#[derive(Clone, Debug, Default)]
pub struct TraceCache {
    dir: Option<PathBuf>,
}

impl TraceCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        TraceCache { dir }
    }

    pub fn path(&self, spec: &WeavingSpec) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("trace-{}-{}.json", spec.big_n, spec.m)))
    }

    pub fn closure_trace(&self, spec: &WeavingSpec) -> CliResult<ClosureTrace> {
        let Some(path) = self.path(spec) else {
            return Ok(ClosureTrace::weaving(spec)?);
        };
        if let Some(ct) = load(&path, spec) {
            return Ok(ct);
        }
        let ct = ClosureTrace::weaving(spec)?;
        if let Err(e) = store(&path, spec, &ct) {
            eprintln!(
                "warning: could not write cache entry {}: {e}",
                path.display()
            );
        }
        Ok(ct)
    }
}

fn load(path: &Path, spec: &WeavingSpec) -> Option<ClosureTrace> {
    let text = fs::read_to_string(path).ok()?;
    let entry: CachedTrace = match serde_json::from_str(&text) {
        Ok(e) => e,
        Err(e) => {
            eprintln!(
                "warning: ignoring unreadable cache entry {}: {e}",
                path.display()
            );
            return None;
        }
    };
    if entry.version != CACHE_VERSION
        || entry.kind != "trace"
        || (entry.big_n, entry.m, entry.n, entry.e) != (spec.big_n, spec.m, spec.n, spec.e)
    {
        eprintln!("warning: ignoring stale cache entry {}", path.display());
        return None;
    }
    match TracePoly::from_json(&entry.trace) {
        Ok(t) => Some(ClosureTrace::new(t, entry.n, entry.e)),
        Err(e) => {
            eprintln!(
                "warning: ignoring malformed cache entry {}: {e}",
                path.display()
            );
            None
        }
    }
}

fn store(path: &Path, spec: &WeavingSpec, ct: &ClosureTrace) -> std::io::Result<()> {
    let dir = path.parent().expect("cache entries live in a directory");
    fs::create_dir_all(dir)?;
    let entry = CachedTrace {
        version: CACHE_VERSION,
        kind: "trace".into(),
        big_n: spec.big_n,
        m: spec.m,
        n: ct.n,
        e: ct.e,
        trace: ct.trace.to_json(),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &entry)?;
    tmp.write_all(b"\n")?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
