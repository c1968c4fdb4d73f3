use std::fmt::Write as _;
use std::fs;

use percode_core::codes::{
    covering_radius, extended_bch, extended_cyclic_hamming, extended_hamming, hamming_code,
    is_extended_perfect, is_linear, is_perfect, min_distance,
};
use percode_core::coloring::{check_coloring, search_coloring_converse};
use percode_core::components::{
    balanced_minimal_component, census_with, explore_rho3, is_i_component, minimal_component,
    verify_completions, verify_i_even_radius, verify_two_maximal_components, Adjacency,
};
use percode_core::io::{format_code, read_code};
use percode_core::partition::{build_partition, krotov_partition};
use percode_core::product::{
    all_perms, perm_sample, product_code, verify_neighborhood_formula, Perm, WordSampling,
};
use percode_core::suite::{
    check_cross_graphs, check_pair_intersections, check_representatives, check_sumset_leaders,
};
use percode_core::{make_field, Code, Error, Report, RunConfig};
use serde_json::{json, Value};

use crate::{
    CodeCmd, CodeKind, ColoringCmd, ComponentsCmd, FieldCmd, Format, Global, PartitionCmd,
    ProductCmd,
};

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

type Result<T> = std::result::Result<T, Error>;

impl Outcome {
    fn pass(text: String, json: Value) -> Outcome {
        Outcome {
            text,
            json,
            passed: true,
        }
    }

    pub fn failed(e: &Error) -> Outcome {
        let witness = match e {
            Error::Violation(c) => c.to_string(),
            other => other.to_string(),
        };
        Outcome {
            text: format!("FAIL {witness}\n"),
            json: json!({ "status": "fail", "witness": witness }),
            passed: false,
        }
    }

    fn report(r: Report) -> Outcome {
        Outcome {
            text: r.to_text(),
            passed: r.passed(),
            json: serde_json::to_value(&r).expect("report serializes"),
        }
    }

    fn verdict(passed: bool, text: String, json: Value) -> Outcome {
        let mut text = text;
        text.push_str(if passed { "PASS\n" } else { "FAIL\n" });
        Outcome { text, json, passed }
    }
}

fn perfect_code_of_length(n: usize) -> Result<Code> {
    let m = match n {
        7 => 3,
        15 => 4,
        _ => {
            return Err(Error::InadmissibleLength {
                len: n,
                form: "7 or 15",
            })
        }
    };
    hamming_code(&make_field(m)?)
}

fn code_output(code: &Code, g: &Global) -> Outcome {
    let n = code.length();
    let words: Vec<String> = code.iter().map(|w| w.to_bin(n)).collect();
    let text = match g.format {
        Format::Text => format_code(code),
        Format::Json => String::new(),
    };
    Outcome::pass(
        text,
        json!({ "length": n, "label": code.label(), "words": words }),
    )
}

pub fn field(cmd: &FieldCmd) -> Result<Outcome> {
    let FieldCmd::Table { m } = cmd;
    let f = make_field(*m)?;
    let width = f.m() as usize;
    let mut text = format!("GF(2^{}) poly {:#b}\n k  a^k\n", f.m(), f.poly());
    for (k, a) in f.antilog_table().iter().enumerate() {
        let _ = writeln!(text, "{k:>2}  {:0width$b}", a.bits());
    }
    text.push_str("coordinates:");
    for c in f.coords() {
        let _ = write!(text, " {}", f.power_label(c.element));
    }
    text.push('\n');
    let json = json!({
        "m": f.m(),
        "poly": f.poly(),
        "antilog": f.antilog_table().iter().map(|a| a.bits()).collect::<Vec<_>>(),
        "coordinates": f.coords().map(|c| f.power_label(c.element)).collect::<Vec<_>>(),
    });
    Ok(Outcome::pass(text, json))
}

pub fn code(cmd: &CodeCmd, g: &Global) -> Result<Outcome> {
    match cmd {
        CodeCmd::Build {
            kind,
            m,
            point,
            parity,
        } => {
            let f = make_field(*m)?;
            let code = match kind {
                CodeKind::Hamming => {
                    if *point >= f.order() {
                        return Err(Error::Coordinate {
                            coord: *point,
                            len: f.order(),
                        });
                    }
                    extended_hamming(&f, f.element_at(*point), *parity)?
                }
                CodeKind::Cyclic => extended_cyclic_hamming(&f)?,
                CodeKind::Bch => extended_bch(&f)?,
                CodeKind::Perfect => hamming_code(&f)?,
            };
            Ok(code_output(&code, g))
        }
        CodeCmd::Stats { file } => {
            let code = read_code(file)?;
            let n = code.length();
            let distance = if code.size() >= 2 {
                Some(min_distance(&code)?)
            } else {
                None
            };
            let rho = if code.is_empty() {
                None
            } else {
                Some(covering_radius(code.words(), n)?)
            };
            let json = json!({
                "label": code.label(),
                "length": n,
                "size": code.size(),
                "min_distance": distance,
                "covering_radius": rho,
                "weight_spectrum": code.weight_spectrum(),
                "linear": is_linear(&code),
                "perfect": is_perfect(&code).unwrap_or(false),
                "extended_perfect": is_extended_perfect(&code).unwrap_or(false),
            });
            let mut text = String::new();
            for (k, v) in json.as_object().expect("object") {
                let _ = writeln!(text, "{k}: {v}");
            }
            Ok(Outcome::pass(text, json))
        }
    }
}

pub fn partition(cmd: &PartitionCmd) -> Result<Outcome> {
    match cmd {
        PartitionCmd::Build { m, dir } => {
            let p = build_partition(&make_field(*m)?)?;
            if let Some(dir) = dir {
                fs::create_dir_all(dir)?;
                for (c, class) in p.classes().iter().enumerate() {
                    percode_core::io::write_code(class, dir.join(format!("class_{c:02}.txt")))?;
                }
            }
            let census = p.census();
            let mut text = String::new();
            for (c, class) in p.classes().iter().enumerate() {
                let _ = writeln!(text, "{c:>2} {} {} words", class.label(), class.size());
            }
            let _ = writeln!(
                text,
                "covered {} of {} odd words, {} in several classes, even intersections {:?}",
                census.covered, census.odd_words, census.overlapping, census.intersection_sizes
            );
            Ok(Outcome::pass(
                text,
                serde_json::to_value(census).expect("census"),
            ))
        }
        PartitionCmd::Verify { m } => {
            let mut r = Report::new("partition", json!({ "m": m }));
            let p = match krotov_partition(&make_field(*m)?) {
                Ok(p) => {
                    r.run("partition.classes", false, || {
                        Ok(format!("{} classes", p.classes().len()))
                    });
                    Some(p)
                }
                Err(e) => {
                    r.run("partition.classes", false, || Err(e));
                    None
                }
            };
            if let (3, Some(p)) = (*m, &p) {
                r.run("partition.pair_intersections", false, || {
                    check_pair_intersections(p)
                });
                r.run("partition.sumset_leaders", false, || {
                    check_sumset_leaders(p)
                });
                r.run("partition.component_representatives", false, || {
                    check_representatives(p)
                });
                r.run("partition.cross_graphs", false, || check_cross_graphs(p));
            }
            Ok(Outcome::report(r))
        }
    }
}

fn parse_perm(perm: &Option<String>) -> Result<Perm> {
    match perm {
        Some(s) => Perm::parse(s),
        None => Ok(Perm::identity(8)),
    }
}

pub fn product(cmd: &ProductCmd, g: &Global) -> Result<Outcome> {
    let p = krotov_partition(&make_field(3)?)?;
    match cmd {
        ProductCmd::Build { m, perm, perm_seed } => {
            if *m != 3 {
                return Err(Error::Unsupported(format!(
                    "product codes are built from the length-8 partition only (m = 3), got m = {m}"
                )));
            }
            let perm = match perm_seed {
                Some(seed) => Perm::seeded(8, *seed),
                None => parse_perm(perm)?,
            };
            let pc = product_code(&p, perm)?;
            Ok(code_output(pc.code(), g))
        }
        ProductCmd::VerifyNeighborhoods { perm, samples, .. } => {
            let pc = product_code(&p, parse_perm(perm)?)?;
            let sampling = match samples {
                Some(count) => WordSampling::Random {
                    count: *count,
                    seed: g.seed,
                },
                None => WordSampling::Exhaustive,
            };
            let s = verify_neighborhood_formula(&pc, sampling)?;
            let text = format!(
                "perm [{}]: {} words x {} pairs, {} comparisons, same-block sizes {:?}, cross sizes {:?}\n",
                pc.perm(),
                s.words,
                s.pairs,
                s.comparisons,
                s.same_block_sizes,
                s.cross_sizes
            );
            Ok(Outcome::verdict(
                true,
                text,
                json!({ "status": "pass", "result": s }),
            ))
        }
    }
}

pub fn components(cmd: &ComponentsCmd, g: &Global) -> Result<Outcome> {
    match cmd {
        ComponentsCmd::Census {
            file,
            pair,
            all_pairs,
            homogeneous_only,
        } => {
            let code = read_code(file)?;
            let n = code.length();
            let pairs: Vec<(usize, usize)> = match (pair, all_pairs) {
                (Some(p), _) => vec![(p[0], p[1])],
                (None, true) => (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| !homogeneous_only || (i < n / 2) == (j < n / 2))
                    .collect(),
                (None, false) => {
                    return Err(Error::Unsupported("give --pair I J or --all-pairs".into()));
                }
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, j) in pairs {
                let c = census_with(&code, Adjacency::Pair(i, j))?;
                let _ = writeln!(text, "{i:>2} {j:>2}: {:?}", c.sizes);
                rows.push(json!({ "i": i, "j": j, "sizes": c.sizes, "total": c.total }));
            }
            Ok(Outcome::pass(
                text,
                json!({ "label": code.label(), "census": rows }),
            ))
        }
        ComponentsCmd::TwoHalves {
            m,
            samples,
            exhaustive,
        } => {
            if *m != 3 {
                return Err(Error::Unsupported(format!(
                    "product codes from the m={m} partition"
                )));
            }
            let p = krotov_partition(&make_field(3)?)?;
            let perms = if *exhaustive {
                all_perms(8)
            } else {
                perm_sample(8, *samples, g.seed)
            };
            let s = verify_two_maximal_components(&p, &perms)?;
            let mut text = format!(
                "{} permutations: {} homogeneous pairs split into two halves, {} switches extended perfect\n",
                s.perms, s.homogeneous_pairs, s.switches
            );
            for (profile, count) in &s.mixed_pair_profiles {
                let _ = writeln!(text, "  mixed pairs {profile}: {count}");
            }
            Ok(Outcome::verdict(
                true,
                text,
                json!({ "status": "pass", "result": s }),
            ))
        }
        ComponentsCmd::Radius { n, i } => {
            let s = verify_i_even_radius(&perfect_code_of_length(*n)?, *i)?;
            let text = format!(
                "n={n} i={i}: rho(I)={} rho(I')={} shell {}\n",
                s.rho_even, s.rho_odd, s.shell
            );
            Ok(Outcome::verdict(
                true,
                text,
                json!({ "status": "pass", "result": s }),
            ))
        }
        ComponentsCmd::Completions { n, i } => {
            let s = verify_completions(&perfect_code_of_length(*n)?, *i)?;
            let found = match s.completions {
                Some(k) => format!("exhaustive search: {k} completions"),
                None => "two known completions perfect (exhaustive search skipped)".into(),
            };
            let passed = s.completions.is_none_or(|k| k == 2);
            Ok(Outcome::verdict(
                passed,
                format!("n={n} i={i}: {found}\n"),
                json!({ "status": if passed { "pass" } else { "fail" }, "result": s }),
            ))
        }
        ComponentsCmd::Minimal { n } => {
            let base = minimal_component(*n)?;
            let balanced = balanced_minimal_component(*n)?;
            let h = (n - 1) / 2;
            let ok = is_i_component(&base, h, *n)? && is_i_component(&balanced, h, *n)?;
            let bins =
                |set: &[percode_core::Word]| set.iter().map(|w| w.to_bin(*n)).collect::<Vec<_>>();
            let mut text = format!("{} words, i-component at {h}: {ok}\n", base.len());
            for (a, b) in bins(&base).iter().zip(bins(&balanced)) {
                let _ = writeln!(text, "{a}  {b}");
            }
            let json = json!({ "status": if ok { "pass" } else { "fail" }, "size": base.len(), "words": bins(&base), "balanced": bins(&balanced) });
            Ok(Outcome::verdict(ok, text, json))
        }
        ComponentsCmd::ExploreRho3 { n, steps } => {
            let s = explore_rho3(*n, *steps, g.seed)?;
            let mut text = format!(
                "{} components over {} steps (size/rho: count)\n",
                s.components_examined, s.steps
            );
            for (k, v) in &s.profiles {
                let _ = writeln!(text, "  {k}: {v}");
            }
            let _ = writeln!(
                text,
                "non-maximal components with rho = 3: {}",
                s.nonmaximal_rho3.len()
            );
            for w in &s.nonmaximal_rho3 {
                let _ = writeln!(text, "  {w}");
            }
            Ok(Outcome::pass(
                text,
                serde_json::to_value(s).expect("exploration"),
            ))
        }
    }
}

pub fn coloring(cmd: &ColoringCmd) -> Result<Outcome> {
    match cmd {
        ColoringCmd::Verify { n, i, colors } => {
            let c = check_coloring(&perfect_code_of_length(*n)?, *i, *colors)?;
            let mut text = format!("n={n} i={i} colors {:?} sizes {:?}\n", c.names, c.sizes);
            let _ = write!(text, "matrix\n{}expected\n{}", c.matrix, c.expected);
            let json = json!({ "status": if c.matches { "pass" } else { "fail" }, "result": c });
            Ok(Outcome::verdict(c.matches, text, json))
        }
        ColoringCmd::SearchConverse { n, budget } => {
            let s = search_coloring_converse(*n, *budget)?;
            let mut text = format!(
                "{} nodes of {} ({}), {} ms\ncolorings {}: i-even first color {}, i-odd first color {}, uniform direction {}\n",
                s.nodes,
                s.budget,
                if s.exhausted { "search complete" } else { "budget spent" },
                s.millis,
                s.colorings,
                s.i_even_first_color,
                s.i_odd_first_color,
                s.uniform_direction
            );
            for w in &s.open_witnesses {
                let _ = writeln!(text, "  neither: {}", w.join(" "));
            }
            Ok(Outcome::pass(
                text,
                serde_json::to_value(s).expect("search"),
            ))
        }
    }
}

pub fn run_all(m: u32, samples: usize, exhaustive: bool, timings: bool, g: &Global) -> Outcome {
    let config = RunConfig {
        m,
        perm_samples: samples,
        seed: g.seed,
        exhaustive,
        timings,
    };
    Outcome::report(percode_core::run_all(&config))
}
