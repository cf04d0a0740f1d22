//! Command-line interface: classify a recurrence's limit set, emit roots of
//! a sequence member as CSV, verify a classification against the pointwise
//! oracles, and plot roots together with the classified set as SVG.
//!
//! Exit codes: 0 success; 1 parse, precondition or I/O error; 2 the
//! sequence is not general (the generality report is printed); 3
//! verification failure.

mod report;
mod specfile;
mod svg;

use limzero::exactpoly::CPoint;
use limzero::harness::{
    check_spec_identities, convergence_report, default_grid, scan_oracle,
};
use limzero::limits::{
    accepted_points, classify, isolated_limits, stability_necessary, LimitSet,
};
use limzero::recurrence::RecurrenceSpec;
use limzero::rootfind::{find_roots, RootFindOptions};
use rand_chacha::rand_core::SeedableRng;

use report::{classify_report, CheckDto, GeneralityDto, NotGeneralReport, VerifyReport};
use specfile::load_spec_file;

const USAGE: &str = "\
limzero: limit sets of zeros of two-term polynomial recurrences

Usage:
  limzero classify <spec.json>
  limzero roots    <spec.json> --n N
  limzero verify   <spec.json> [--n-max N] [--grid G] [--inject-corrupt-set]
  limzero plot     <spec.json> --n N -o <out.svg>

The spec file is a JSON object with exact rational strings:
  { \"a\": \"4\", \"b\": \"2\", \"c\": \"16\", \"d\": \"0\", \"e\": \"0\",
    \"W0\": [\"1\", \"1\"], \"W1\": [\"2\", \"6\", \"8\"], \"label\": \"ladder\" }

Options:
  --n N                 sequence index (0 <= N <= 10000)
  --n-max N             largest index sampled by verify (default 24, >= 4)
  --grid G              verify scan resolution GxG (default 256, >= 64)
  -o FILE               output path for the SVG figure
  --inject-corrupt-set  test hook: verify against a deliberately shifted set
";

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(String::as_str) {
        Some("classify") => cmd_classify(&args[1..]),
        Some("roots") => cmd_roots(&args[1..]),
        Some("verify") => cmd_verify(&args[1..]),
        Some("plot") => cmd_plot(&args[1..]),
        Some("-h") | Some("--help") => {
            print!("{USAGE}");
            0
        }
        Some(other) => {
            eprintln!("error: unknown command '{other}'\n{USAGE}");
            1
        }
        None => {
            eprintln!("{USAGE}");
            1
        }
    }
}

#[derive(Default)]
struct Options {
    path: Option<String>,
    n: Option<usize>,
    n_max: Option<usize>,
    grid: Option<usize>,
    out: Option<String>,
    corrupt: bool,
}

fn parse_options(args: &[String]) -> Result<Options, String> {
    let mut opts = Options::default();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut numeric = |name: &str| -> Result<usize, String> {
            it.next()
                .ok_or_else(|| format!("{name} requires a value"))?
                .parse::<usize>()
                .map_err(|_| format!("{name} requires a non-negative integer"))
        };
        match arg.as_str() {
            "--n" => opts.n = Some(numeric("--n")?),
            "--n-max" => opts.n_max = Some(numeric("--n-max")?),
            "--grid" => opts.grid = Some(numeric("--grid")?),
            "-o" | "--output" => {
                opts.out = Some(
                    it.next()
                        .ok_or_else(|| "-o requires a path".to_string())?
                        .clone(),
                )
            }
            "--inject-corrupt-set" => opts.corrupt = true,
            other if other.starts_with('-') => return Err(format!("unknown option '{other}'")),
            other => {
                if opts.path.is_some() {
                    return Err(format!("unexpected extra argument '{other}'"));
                }
                opts.path = Some(other.to_string());
            }
        }
    }
    Ok(opts)
}

fn fail(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    1
}

/// Loads and validates; returns exit code 1 on input errors and 2 with the
/// generality report printed when the sequence is not general.
fn load_general(path: &str) -> Result<(RecurrenceSpec, Option<String>), i32> {
    let file = load_spec_file(path).map_err(|e| fail(&e))?;
    let report = file.spec.validate().map_err(|e| fail(&e.to_string()))?;
    if !report.is_general() {
        let out = NotGeneralReport {
            label: file.label.clone(),
            general: false,
            generality: GeneralityDto::from(&report),
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        return Err(2);
    }
    Ok((file.spec, file.label))
}

fn cmd_classify(args: &[String]) -> i32 {
    let opts = match parse_options(args) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let Some(path) = opts.path else {
        return fail("classify requires a spec file path");
    };
    let (spec, label) = match load_general(&path) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let report = spec.validate().expect("validated above");
    let (scalars, set) = classify(&spec).expect("general");
    let isolated = isolated_limits(&spec).expect("general");
    let stability = stability_necessary(&spec, &scalars, &set);
    let out = classify_report(&spec, label, &report, &scalars, &set, &isolated, &stability);
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    0
}

fn cmd_roots(args: &[String]) -> i32 {
    let opts = match parse_options(args) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let Some(path) = opts.path else {
        return fail("roots requires a spec file path");
    };
    let Some(n) = opts.n else {
        return fail("roots requires --n");
    };
    if n > 10_000 {
        return fail("--n must be at most 10000");
    }
    let file = match load_spec_file(&path) {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    let poly = file.spec.nth_poly(n);
    if poly.is_zero() {
        return fail(&format!("W_{n} is identically zero; it has no root set"));
    }
    let roots = find_roots(&poly, &RootFindOptions::default()).expect("nonzero");
    print!("{}", roots_csv(&roots));
    0
}

fn roots_csv(roots: &limzero::rootfind::RootSet) -> String {
    let mut out = String::new();
    if roots.converged {
        out.push_str("re,im,residual\n");
        for (r, res) in roots.roots.iter().zip(&roots.residuals) {
            out.push_str(&format!("{:?},{:?},{:?}\n", r.re, r.im, res));
        }
    } else {
        out.push_str("re,im,residual,converged\n");
        for (r, res) in roots.roots.iter().zip(&roots.residuals) {
            out.push_str(&format!("{:?},{:?},{:?},false\n", r.re, r.im, res));
        }
    }
    out
}

/// Test hook: translate the set so the oracle scan must flag it.
fn corrupt_set(set: &LimitSet) -> LimitSet {
    const SHIFT: f64 = 0.37;
    let dz = CPoint::new(SHIFT, 0.0);
    match set.clone() {
        LimitSet::Arc(mut a) => {
            a.center += SHIFT;
            a.end_plus += dz;
            a.end_minus += dz;
            a.through += SHIFT;
            LimitSet::Arc(a)
        }
        LimitSet::ArcUnionReal { mut arc } => {
            arc.center += SHIFT;
            arc.end_plus += dz;
            arc.end_minus += dz;
            arc.through += SHIFT;
            LimitSet::ArcUnionReal { arc }
        }
        LimitSet::VerticalSegment { x, y_half } => LimitSet::VerticalSegment {
            x: x + SHIFT,
            y_half,
        },
        LimitSet::TwoVerticalRaysUnionReal { x, y_half } => {
            LimitSet::TwoVerticalRaysUnionReal { x: x + SHIFT, y_half }
        }
        LimitSet::Real(_) => LimitSet::VerticalSegment {
            x: SHIFT,
            y_half: 1.0,
        },
        LimitSet::RealUnionCircle {
            real,
            circle_center,
            circle_radius,
        } => LimitSet::RealUnionCircle {
            real,
            circle_center: circle_center + SHIFT,
            circle_radius,
        },
        LimitSet::RealUnionVerticalLine { real, x } => {
            LimitSet::RealUnionVerticalLine { real, x: x + SHIFT }
        }
        LimitSet::Circle { center, radius } => LimitSet::Circle {
            center: center + SHIFT,
            radius,
        },
        LimitSet::VerticalLine { x } => LimitSet::VerticalLine { x: x + SHIFT },
    }
}

fn cmd_verify(args: &[String]) -> i32 {
    let opts = match parse_options(args) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let Some(path) = opts.path else {
        return fail("verify requires a spec file path");
    };
    let n_max = opts.n_max.unwrap_or(24);
    let grid_res = opts.grid.unwrap_or(256);
    if n_max < 4 {
        return fail("--n-max must be at least 4");
    }
    if grid_res < 64 {
        return fail("--grid must be at least 64");
    }
    let (spec, label) = match load_general(&path) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (_, mut set) = classify(&spec).expect("general");
    if opts.corrupt {
        set = corrupt_set(&set);
    }
    let mut checks = Vec::new();

    let grid = default_grid(&set, grid_res);
    match scan_oracle(&spec, &set, &grid) {
        Ok(scan) => checks.push(CheckDto {
            name: "scan_oracle",
            passed: scan.passed,
            detail: format!(
                "grid {}x{} on [{:.3},{:.3}]x[{:.3},{:.3}]: {} false negatives, {} false positives",
                grid.nx,
                grid.ny,
                grid.x_lo,
                grid.x_hi,
                grid.y_lo,
                grid.y_hi,
                scan.false_negatives.len(),
                scan.false_positives.len()
            ),
        }),
        Err(e) => checks.push(CheckDto {
            name: "scan_oracle",
            passed: false,
            detail: e.to_string(),
        }),
    }

    let mut n_values = vec![(n_max / 4).max(2), (n_max / 2).max(2), n_max];
    n_values.dedup();
    match convergence_report(&spec, &n_values) {
        Ok(conv) => {
            let first = conv.per_n.first().expect("nonempty");
            let last = conv.per_n.last().expect("nonempty");
            let passed =
                last.max_dist < first.max_dist && conv.per_n.iter().all(|e| e.converged);
            let detail = conv
                .per_n
                .iter()
                .map(|e| {
                    format!(
                        "n={}: roots={} max_dist={:.6} mean_dist={:.6} near_isolated={}",
                        e.n, e.num_roots, e.max_dist, e.mean_dist, e.num_near_isolated
                    )
                })
                .collect::<Vec<_>>()
                .join("; ");
            checks.push(CheckDto {
                name: "convergence",
                passed,
                detail,
            });
        }
        Err(e) => checks.push(CheckDto {
            name: "convergence",
            passed: false,
            detail: e.to_string(),
        }),
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1DEA);
    let failures = check_spec_identities(&spec, 0, &mut rng);
    checks.push(CheckDto {
        name: "identities",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "all exact and pointwise identities hold".to_string()
        } else {
            failures
                .iter()
                .map(|f| format!("{}: {}", f.check, f.detail))
                .collect::<Vec<_>>()
                .join("; ")
        },
    });

    let passed = checks.iter().all(|c| c.passed);
    let out = VerifyReport {
        label,
        checks,
        passed,
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    if passed {
        0
    } else {
        3
    }
}

fn cmd_plot(args: &[String]) -> i32 {
    let opts = match parse_options(args) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let Some(path) = opts.path else {
        return fail("plot requires a spec file path");
    };
    let Some(n) = opts.n else {
        return fail("plot requires --n");
    };
    let Some(out_path) = opts.out else {
        return fail("plot requires -o <out.svg>");
    };
    if n > 10_000 {
        return fail("--n must be at most 10000");
    }
    let (spec, _) = match load_general(&path) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (_, set) = classify(&spec).expect("general");
    let isolated = accepted_points(&isolated_limits(&spec).expect("general"));
    let poly = spec.nth_poly(n);
    if poly.is_zero() {
        return fail(&format!("W_{n} is identically zero"));
    }
    let roots = find_roots(&poly, &RootFindOptions::default()).expect("nonzero");
    let figure = svg::render_figure(&set, &roots.roots, &isolated);
    if let Err(e) = std::fs::write(&out_path, figure) {
        return fail(&format!("cannot write '{out_path}': {e}"));
    }
    0
}
