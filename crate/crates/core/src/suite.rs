//! The full verification pipeline: field, codes, partition, product code, components,
//! colorings, run in that order into one [`Report`].

use serde::Serialize;

use crate::codes::{
    brute_force_code, extended_bch, extended_cyclic_hamming, extended_hamming, hamming_checks,
    hamming_code, intersect, min_distance,
};
use crate::coloring::check_coloring;
use crate::components::{
    balanced_minimal_component, is_i_component, minimal_component, verify_completions,
    verify_i_even_radius, verify_two_maximal_components,
};
use crate::error::{Error, Result};
use crate::gf::{make_field, Field};
use crate::partition::{
    build_partition, cross_graph, krotov_partition, pi_split, verify_component_representatives,
    verify_sumset_leaders, verify_translated_classes, Partition,
};
use crate::product::{
    all_perms, perm_sample, product_code, verify_neighborhood_formula, Perm, WordSampling,
};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Field degree of the partition census (3 or 4); the structural checks that follow
    /// always use the length-8 partition.
    pub m: u32,
    /// Random permutations on top of identity and reversal.
    pub perm_samples: usize,
    pub seed: u64,
    /// All `8!` permutations instead of the sample.
    pub exhaustive: bool,
    /// Record wall-clock time per check (makes reports differ between runs).
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m: 3,
            perm_samples: 50,
            seed: 1,
            exhaustive: false,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn perms(&self) -> Vec<Perm> {
        if self.exhaustive {
            all_perms(8)
        } else {
            perm_sample(8, self.perm_samples, self.seed)
        }
    }
}

fn fields() -> Result<[Field; 2]> {
    Ok([make_field(3)?, make_field(4)?])
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
}

pub fn check_field_laws() -> Result<String> {
    for f in fields()? {
        let q = f.order() as u32;
        for a in 1..q {
            for b in 1..q {
                let (x, y) = (f.element(a)?, f.element(b)?);
                let lhs = f.log(f.mul(x, y)).expect("nonzero");
                let rhs = (f.log(x).expect("nonzero") + f.log(y).expect("nonzero")) % f.cycle();
                if lhs != rhs {
                    return Err(Error::violation(
                        "log(ab) = log a + log b",
                        format!("m={} a={x} b={y}", f.m()),
                    ));
                }
            }
        }
    }
    Ok("log tables multiplicative at m=3,4".into())
}

pub fn check_kernel_matches_enumeration() -> Result<String> {
    let mut codes = 0;
    for f in fields()? {
        for c in 0..f.order() {
            let a = f.element_at(c);
            for p in 0..2 {
                let kernel = extended_hamming(&f, a, p)?;
                let checks = hamming_checks(&f, a, p)?;
                let brute = brute_force_code(&f, |s| checks.is_satisfied(s), "brute")?;
                if kernel != brute {
                    return Err(Error::violation(
                        "kernel construction equals enumeration",
                        format!(
                            "{} at m={}: {} vs {} words",
                            kernel.label(),
                            f.m(),
                            kernel.size(),
                            brute.size()
                        ),
                    ));
                }
                codes += 1;
            }
        }
    }
    Ok(format!("{codes} codes agree"))
}

pub fn check_bch_intersections() -> Result<String> {
    let mut count = 0;
    for f in fields()? {
        let hbar = extended_cyclic_hamming(&f)?;
        let bch = extended_bch(&f)?;
        for c in 0..f.order() {
            let inter = intersect(&hbar, &extended_hamming(&f, f.element_at(c), 0)?)?;
            if inter != bch {
                return Err(Error::violation(
                    "Hbar ∩ H_a^0 is the extended BCH code",
                    format!(
                        "m={} a={}: {} vs {} words",
                        f.m(),
                        f.power_label(f.element_at(c)),
                        inter.size(),
                        bch.size()
                    ),
                ));
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} intersections equal BCH (16 and 128 words)"
    ))
}

pub fn check_partition(m: u32) -> Result<String> {
    let f = make_field(m)?;
    let census = build_partition(&f)?.validate()?;
    Ok(format!(
        "{} classes of {} cover {} odd words, even intersections {:?}",
        census.classes, census.class_sizes[0], census.covered, census.intersection_sizes
    ))
}

pub fn check_pair_intersections(p: &Partition) -> Result<String> {
    let mut count = 0;
    for (i, j) in pairs(p.n()) {
        pi_split(p, i, j)?;
        count += 1;
    }
    Ok(format!("{count} pairs split into complementary supports"))
}

pub fn check_sumset_leaders(p: &Partition) -> Result<String> {
    let mut count = 0;
    for (i, j) in ordered_pairs(p.n()) {
        verify_sumset_leaders(p, i, j)?;
        count += 1;
    }
    Ok(format!("{count} ordered pairs with 16 weight-2 leaders"))
}

pub fn check_representatives(p: &Partition) -> Result<String> {
    let mut reps = 0;
    for (i, j) in ordered_pairs(p.n()) {
        verify_component_representatives(p, i, j)?;
        reps += 1;
    }
    let mut pairs_checked = 0;
    for k in 0..p.n() {
        for (r, s) in pairs(p.n()) {
            pairs_checked += verify_translated_classes(p, k, r, s)?;
        }
    }
    Ok(format!(
        "{reps} representative sets, {pairs_checked} translated word pairs"
    ))
}

pub fn check_cross_graphs(p: &Partition) -> Result<String> {
    let mut count = 0;
    for (k, l) in pairs(p.n()) {
        let g = cross_graph(p, k, l)?;
        if !g.is_connected()
            || !g.is_bipartite_between_classes()
            || g.degrees().iter().any(|&d| d != 4)
        {
            return Err(Error::violation(
                "distance-2 graph between two classes is connected, bipartite and 4-regular",
                format!("classes {k},{l}: degrees {:?}", g.degrees()),
            ));
        }
        count += 1;
    }
    Ok(format!("{count} graphs connected and 4-regular"))
}

pub fn check_product_codes(p: &Partition, perms: &[Perm]) -> Result<String> {
    for perm in perms {
        let pc = product_code(p, perm.clone())?;
        let d = min_distance(pc.code())?;
        if pc.code().size() != 2048 || d != 4 {
            return Err(Error::violation(
                "product code has 2048 words and minimum distance 4",
                format!("perm [{perm}]: {} words, distance {d}", pc.code().size()),
            ));
        }
    }
    Ok(format!(
        "{} permutations give extended perfect codes",
        perms.len()
    ))
}

pub fn check_neighborhood_formula(p: &Partition) -> Result<String> {
    let pc = product_code(p, Perm::identity(p.n()))?;
    let s = verify_neighborhood_formula(&pc, WordSampling::Exhaustive)?;
    Ok(format!(
        "{} words × {} pairs, {} comparisons",
        s.words, s.pairs, s.comparisons
    ))
}

pub fn check_two_maximal_components(p: &Partition, perms: &[Perm]) -> Result<String> {
    let s = verify_two_maximal_components(p, perms)?;
    Ok(format!(
        "{} permutations, {} homogeneous pairs split 1024+1024, {} switches",
        s.perms, s.homogeneous_pairs, s.switches
    ))
}

pub fn check_i_even_radius() -> Result<String> {
    let mut count = 0;
    for f in fields()? {
        let code = hamming_code(&f)?;
        for i in 0..code.length() {
            verify_i_even_radius(&code, i)?;
            count += 1;
        }
    }
    Ok(format!("{count} directions at n=7,15"))
}

pub fn check_coloring_matrices() -> Result<String> {
    let mut count = 0;
    for f in fields()? {
        let code = hamming_code(&f)?;
        for i in 0..code.length() {
            for colors in [6, 4] {
                let c = check_coloring(&code, i, colors)?;
                if !c.matches {
                    return Err(Error::violation(
                        format!("{colors}-coloring has the expected parameter matrix"),
                        format!("n={} i={i}: {:?}", c.n, c.matrix.0),
                    ));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} colorings match"))
}

pub fn check_completions() -> Result<String> {
    let mut exhaustive = 0;
    let mut known = 0;
    for f in fields()? {
        let code = hamming_code(&f)?;
        for i in 0..code.length() {
            let s = verify_completions(&code, i)?;
            match s.completions {
                Some(2) => exhaustive += 1,
                Some(k) => {
                    return Err(Error::violation(
                        "exactly two completions",
                        format!("n={} i={i}: {k}", code.length()),
                    ))
                }
                None if code.length() == 7 => {
                    return Err(Error::Invariant(
                        "exhaustive completion search skipped at n=7".into(),
                    ))
                }
                None => known += 1,
            }
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive searches find 2 completions, {known} known pairs perfect"
    ))
}

pub fn check_minimal_components() -> Result<String> {
    for (n, size) in [(7usize, 8usize), (15, 128)] {
        let h = (n - 1) / 2;
        let base = minimal_component(n)?;
        let balanced = balanced_minimal_component(n)?;
        if base.len() != size || balanced.len() != size {
            return Err(Error::violation(
                format!("minimal component has {size} words"),
                format!("n={n}: {}", base.len()),
            ));
        }
        if let Some(w) = balanced
            .iter()
            .find(|w| w.weight() as usize != h && w.weight() as usize != h + 1)
        {
            return Err(Error::violation(
                format!("weights are {h} or {}", h + 1),
                w.to_bin(n),
            ));
        }
        for (name, set) in [("formula", &base), ("balanced", &balanced)] {
            if !is_i_component(set, h, n)? {
                return Err(Error::violation(
                    "minimal component is an i-component at the parity position",
                    format!("{name} n={n}"),
                ));
            }
        }
    }
    Ok("sizes 8 and 128, i-components at the parity position".into())
}

/// Runs every check in dependency order. Checks needing the length-8 partition fail
/// together if it cannot be built.
pub fn run_all(config: &RunConfig) -> Report {
    let echo = serde_json::to_value(config).expect("config serializes");
    let mut r = Report::new("percode", echo);
    let t = config.timings;
    r.run("gf.field_laws", t, check_field_laws);
    r.run(
        "codes.kernel_matches_enumeration",
        t,
        check_kernel_matches_enumeration,
    );
    r.run(
        "codes.bch_is_hamming_intersection",
        t,
        check_bch_intersections,
    );
    r.run(&format!("partition.classes_m{}", config.m), t, || {
        check_partition(config.m)
    });
    let p8 = make_field(3).and_then(|f| krotov_partition(&f));
    let perms = config.perms();
    type PartitionCheck<'a> = Box<dyn Fn(&Partition) -> Result<String> + 'a>;
    let dependent: Vec<(&str, PartitionCheck)> = vec![
        (
            "partition.pair_intersections",
            Box::new(check_pair_intersections),
        ),
        ("partition.sumset_leaders", Box::new(check_sumset_leaders)),
        (
            "partition.component_representatives",
            Box::new(check_representatives),
        ),
        ("partition.cross_graphs", Box::new(check_cross_graphs)),
        (
            "product.extended_perfect",
            Box::new(|p| check_product_codes(p, &perms)),
        ),
        (
            "product.neighborhood_formula",
            Box::new(check_neighborhood_formula),
        ),
        (
            "components.two_maximal_components",
            Box::new(|p| check_two_maximal_components(p, &perms)),
        ),
    ];
    for (name, check) in dependent {
        r.run(name, t, || match &p8 {
            Ok(p) => check(p),
            Err(e) => Err(Error::Invariant(format!(
                "length-8 partition unavailable: {e}"
            ))),
        });
    }
    r.run("components.i_even_radius", t, check_i_even_radius);
    r.run("coloring.parameter_matrices", t, check_coloring_matrices);
    r.run("components.completions", t, check_completions);
    r.run("components.minimal_component", t, check_minimal_components);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_16_census_fails_with_counts() {
        let err = check_partition(4).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("12288 of 32768 odd words covered"), "{text}");
        assert!(
            text.contains("10240 words in more than one class"),
            "{text}"
        );
    }

    #[test]
    fn config_echo_fields() {
        let v = serde_json::to_value(RunConfig::default()).unwrap();
        assert_eq!(v["perm_samples"], 50);
        assert_eq!(v["seed"], 1);
        assert_eq!(RunConfig::default().perms().len(), 52);
    }
}
