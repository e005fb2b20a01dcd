//! Ground truth by exhaustive Cayley-graph exploration.
//!
//! [`bfs_spheres`] walks the Cayley graph of a group flavor breadth-first
//! from the identity, storing one canonical form per element, and reports
//! the exact sphere sizes — the number of distinct elements of each
//! geodesic length. This is the reference the closed-form and
//! dynamic-programming counts are judged against: in the planar and free
//! flavors the assembled counts must match these sizes exactly, while the
//! two-dimensional literal recursion is expected to exceed them from
//! length 2 on.
//!
//! Multiplying an element of length `mu` by one signed generator always
//! lands at length `mu - 1` or `mu + 1` (the sign-sum parity flips), so the
//! walk only needs the current frontier: extensions of smaller length are
//! already-known elements and are dropped without a lookup. Any other
//! length is reported as [`Error::LengthAnomaly`] — it would mean the
//! canonicalizer is broken, and no count derived from it could be trusted.

use std::collections::HashSet;

use crate::group::{Flavor, GroupSpec};
use crate::normal::{CanonicalAlgo, Canonicalizer, NormalForm};
use crate::{Error, Result};

/// Options for the breadth-first walk.
#[derive(Debug, Clone, Copy)]
pub struct BfsOptions {
    /// Upper bound on elements stored across all completed spheres. When
    /// the next sphere would push the total past the cap the walk stops
    /// and the profile is marked truncated.
    pub cap: usize,
    /// Which canonicalization algorithm drives the walk.
    pub algo: CanonicalAlgo,
}

impl Default for BfsOptions {
    fn default() -> BfsOptions {
        BfsOptions {
            cap: 10_000_000,
            algo: CanonicalAlgo::Rewrite,
        }
    }
}

/// Exact sphere sizes of one group flavor, radius by radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereProfile {
    pub flavor: Flavor,
    pub n: u16,
    /// `sizes[mu]` = number of elements of geodesic length `mu`;
    /// `sizes[0] == 1` for the identity.
    pub sizes: Vec<u64>,
    /// True when the walk stopped at the storage cap before reaching the
    /// requested radius; only completed spheres are listed.
    pub truncated: bool,
}

impl SphereProfile {
    /// Ratios of consecutive sphere sizes — the measured branching factor.
    pub fn growth_ratios(&self) -> Vec<f64> {
        self.sizes
            .windows(2)
            .map(|w| w[1] as f64 / w[0] as f64)
            .collect()
    }
}

/// Walk the Cayley graph out to radius `mu_max` and record sphere sizes.
pub fn bfs_spheres(spec: &GroupSpec, mu_max: u64, opts: &BfsOptions) -> Result<SphereProfile> {
    let canon = Canonicalizer::new(*spec);
    bfs_spheres_with(&canon, mu_max, opts).map(|(profile, _)| profile)
}

/// As [`bfs_spheres`], but also return the final frontier: the canonical
/// forms of every element whose length is the last completed radius.
pub fn bfs_frontier(
    spec: &GroupSpec,
    mu: u64,
    opts: &BfsOptions,
) -> Result<(SphereProfile, Vec<NormalForm>)> {
    let canon = Canonicalizer::new(*spec);
    bfs_spheres_with(&canon, mu, opts)
}

/// Walk out to radius `mu_max` and return every completed sphere as a
/// sorted list of canonical forms (`layers[mu]` = the elements of geodesic
/// length `mu`). One walk; memory holds all layers.
pub fn bfs_layers(
    spec: &GroupSpec,
    mu_max: u64,
    opts: &BfsOptions,
) -> Result<(SphereProfile, Vec<Vec<NormalForm>>)> {
    let canon = Canonicalizer::new(*spec);
    let gens = spec.signed_gens();
    let mut layers: Vec<Vec<NormalForm>> = vec![vec![NormalForm::identity()]];
    let mut sizes: Vec<u64> = vec![1];
    let mut stored: usize = 1;
    let mut truncated = false;
    for r in 0..mu_max {
        let mut next: HashSet<NormalForm> = HashSet::new();
        let mut capped = false;
        'frontier: for nf in &layers[r as usize] {
            for &g in &gens {
                let ext = canon.extend(nf, g, opts.algo)?;
                let len = ext.irreducible_length();
                if len == r + 1 {
                    next.insert(ext);
                    if stored + next.len() > opts.cap {
                        capped = true;
                        break 'frontier;
                    }
                } else if !(r >= 1 && len == r - 1) {
                    return Err(Error::LengthAnomaly { from: r, to: len });
                }
            }
        }
        if capped {
            truncated = true;
            break;
        }
        stored += next.len();
        sizes.push(next.len() as u64);
        let mut layer: Vec<NormalForm> = next.into_iter().collect();
        layer.sort_by_key(|nf| nf.sort_key(spec));
        layers.push(layer);
    }
    Ok((
        SphereProfile {
            flavor: spec.flavor(),
            n: spec.n(),
            sizes,
            truncated,
        },
        layers,
    ))
}

/// Effective branching number per radius: `sizes[k+1]/sizes[k] + 1` (one
/// step back plus the measured forward branching). Needs at least two
/// completed spheres.
pub fn empirical_z_eff(profile: &SphereProfile) -> Result<Vec<f64>> {
    if profile.sizes.len() < 2 {
        return Err(Error::ProfileTooShort);
    }
    Ok(profile
        .growth_ratios()
        .into_iter()
        .map(|r| r + 1.0)
        .collect())
}

fn bfs_spheres_with(
    canon: &Canonicalizer,
    mu_max: u64,
    opts: &BfsOptions,
) -> Result<(SphereProfile, Vec<NormalForm>)> {
    let spec = *canon.spec();
    let gens = spec.signed_gens();
    let mut frontier: Vec<NormalForm> = vec![NormalForm::identity()];
    let mut sizes: Vec<u64> = vec![1];
    let mut stored: usize = 1;
    let mut truncated = false;
    for r in 0..mu_max {
        let mut next: HashSet<NormalForm> = HashSet::new();
        let mut capped = false;
        'frontier: for nf in &frontier {
            for &g in &gens {
                let ext = canon.extend(nf, g, opts.algo)?;
                let len = ext.irreducible_length();
                if len == r + 1 {
                    next.insert(ext);
                    if stored + next.len() > opts.cap {
                        capped = true;
                        break 'frontier;
                    }
                } else if !(r >= 1 && len == r - 1) {
                    return Err(Error::LengthAnomaly { from: r, to: len });
                }
            }
        }
        if capped {
            truncated = true;
            break;
        }
        stored += next.len();
        sizes.push(next.len() as u64);
        frontier = next.into_iter().collect();
    }
    Ok((
        SphereProfile {
            flavor: spec.flavor(),
            n: spec.n(),
            sizes,
            truncated,
        },
        frontier,
    ))
}

/// All canonical forms of geodesic length exactly `mu`, in the
/// deterministic enumeration order (sorted by the serial/axis/exponent
/// key of the syllable sequence).
pub fn enumerate_classes(spec: &GroupSpec, mu: u64, opts: &BfsOptions) -> Result<Vec<NormalForm>> {
    let (profile, frontier) = bfs_frontier(spec, mu, opts)?;
    if profile.truncated {
        return Err(Error::CapExceeded {
            stored: frontier.len(),
            cap: opts.cap,
        });
    }
    let mut classes = frontier;
    classes.sort_by_key(|nf| nf.sort_key(spec));
    Ok(classes)
}

/// Measured branching of the Cayley graph: sphere ratios plus their
/// inferred effective coordination number (`ratio + 1` would be the degree
/// of a tree with the same growth at radius 1, and the limiting ratio in
/// any flavor is `z_eff - 1`).
#[derive(Debug, Clone)]
pub struct BranchingReport {
    pub profile: SphereProfile,
    /// `ratios[k]` = `sizes[k + 1] / sizes[k]`.
    pub ratios: Vec<f64>,
}

/// Run the walk and report empirical branching ratios.
pub fn empirical_branching(
    spec: &GroupSpec,
    mu_max: u64,
    opts: &BfsOptions,
) -> Result<BranchingReport> {
    let profile = bfs_spheres(spec, mu_max, opts)?;
    let ratios = profile.growth_ratios();
    Ok(BranchingReport { profile, ratios })
}

/// Result of running both canonicalization algorithms side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualOracleReport {
    pub flavor: Flavor,
    pub n: u16,
    pub mu_max: u64,
    /// Elements compared per radius.
    pub compared: Vec<u64>,
    /// Number of radii at which the two element sets differed (zero unless
    /// an algorithm is broken).
    pub mismatched_radii: u64,
}

impl DualOracleReport {
    pub fn agreed(&self) -> bool {
        self.mismatched_radii == 0
    }
}

/// Walk the Cayley graph independently with both canonicalization
/// algorithms and compare the resulting element sets radius by radius.
pub fn dual_oracle_check(spec: &GroupSpec, mu_max: u64, opts: &BfsOptions) -> Result<DualOracleReport> {
    let (pa, rewrite) = bfs_layers(
        spec,
        mu_max,
        &BfsOptions {
            algo: CanonicalAlgo::Rewrite,
            ..*opts
        },
    )?;
    let (pb, stack) = bfs_layers(
        spec,
        mu_max,
        &BfsOptions {
            algo: CanonicalAlgo::Stack,
            ..*opts
        },
    )?;
    if pa.truncated || pb.truncated {
        return Err(Error::CapExceeded {
            stored: pa.sizes.iter().chain(pb.sizes.iter()).sum::<u64>() as usize,
            cap: opts.cap,
        });
    }
    let mut compared = Vec::new();
    let mut mismatched = 0u64;
    for mu in 0..=mu_max as usize {
        if rewrite[mu] != stack[mu] {
            mismatched += 1;
        }
        compared.push(rewrite[mu].len() as u64);
    }
    Ok(DualOracleReport {
        flavor: spec.flavor(),
        n: spec.n(),
        mu_max,
        compared,
        mismatched_radii: mismatched,
    })
}

/// Serialize a profile as `flavor,n,mu,sphere_size` CSV (with header).
pub fn profile_to_csv(profile: &SphereProfile) -> String {
    let mut out = String::from("flavor,n,mu,sphere_size\n");
    for (mu, size) in profile.sizes.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            profile.flavor.name(),
            profile.n,
            mu,
            size
        ));
    }
    out
}

/// Parse a profile back from [`profile_to_csv`] output. The parsed profile
/// is never marked truncated; truncation is a property of a walk, not of
/// its recorded spheres.
pub fn profile_from_csv(text: &str) -> Result<SphereProfile> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty profile CSV".into()))?;
    if header.trim() != "flavor,n,mu,sphere_size" {
        return Err(Error::Parse(format!("unexpected CSV header: {header:?}")));
    }
    let mut flavor: Option<Flavor> = None;
    let mut n: Option<u16> = None;
    let mut sizes: Vec<u64> = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!("line {}: expected 4 fields", i + 2)));
        }
        let f = Flavor::parse(fields[0])?;
        let row_n: u16 = fields[1]
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad n {:?}", i + 2, fields[1])))?;
        let mu: u64 = fields[2]
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad mu {:?}", i + 2, fields[2])))?;
        let size: u64 = fields[3]
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad size {:?}", i + 2, fields[3])))?;
        if *flavor.get_or_insert(f) != f || *n.get_or_insert(row_n) != row_n {
            return Err(Error::Parse(format!(
                "line {}: profile mixes flavors or sizes",
                i + 2
            )));
        }
        if mu as usize != sizes.len() {
            return Err(Error::Parse(format!(
                "line {}: radii must ascend from 0 without gaps",
                i + 2
            )));
        }
        sizes.push(size);
    }
    Ok(SphereProfile {
        flavor: flavor.ok_or_else(|| Error::Parse("profile CSV has no data rows".into()))?,
        n: n.unwrap(),
        sizes,
        truncated: false,
    })
}
