//! Corpus access and brute-force oracles shared by the integration tests.
//! Nothing here goes through the poset builder or the Möbius recursion.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use serde_json::{json, Value};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use hyparr::linalg::{solve_affine, GaussianRational, IntegerMatrix, Matrix};
use hyparr::{parse_arrangement, Arrangement, IntersectionPoset};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// `(file name, arrangement)` for every `*.arr` file, sorted by name.
pub fn corpus() -> Vec<(String, Arrangement)> {
    let mut out: Vec<(String, Arrangement)> = std::fs::read_dir(corpus_dir())
        .expect("corpus dir")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "arr").then_some(path)
        })
        .map(|path| {
            let text = std::fs::read_to_string(&path).unwrap();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let a = parse_arrangement(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, a)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The intersection of the hyperplanes in `subset`, as a witness point plus
/// kernel basis, or `None` when empty.
fn solve_subset(a: &Arrangement, subset: &[usize]) -> Option<(Vec<GaussianRational>, Vec<Vec<GaussianRational>>)> {
    let n = a.ambient_dim();
    let m = Matrix::from_rows(n, subset.iter().map(|&i| a.hyperplane(i).normal().to_vec()));
    let rhs: Vec<GaussianRational> = subset.iter().map(|&i| a.hyperplane(i).constant().clone()).collect();
    solve_affine(&m, &rhs)
}

fn dot(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    a.iter().zip(b).fold(GaussianRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Every hyperplane containing the affine space `w + span(kernel)`.
fn closure(a: &Arrangement, w: &[GaussianRational], kernel: &[Vec<GaussianRational>]) -> BTreeSet<usize> {
    (0..a.len())
        .filter(|&i| {
            let h = a.hyperplane(i);
            dot(h.normal(), w) == *h.constant() && kernel.iter().all(|k| dot(h.normal(), k).is_zero())
        })
        .collect()
}

/// One entry per nonempty sub-collection.
pub struct SubsetRecord {
    pub size: usize,
    pub dim: usize,
    pub closure: BTreeSet<usize>,
}

/// Enumerates all `2^N` sub-collections.
pub fn all_subsets(a: &Arrangement) -> Vec<SubsetRecord> {
    let n = a.len();
    assert!(n <= 16, "brute force is exponential");
    (0u32..(1 << n))
        .filter_map(|mask| {
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let (w, kernel) = solve_subset(a, &subset)?;
            Some(SubsetRecord {
                size: subset.len(),
                dim: kernel.len(),
                closure: closure(a, &w, &kernel),
            })
        })
        .collect()
}

/// Flats as closed hyperplane sets mapped to their dimension.
pub fn brute_force_flats(a: &Arrangement) -> BTreeMap<BTreeSet<usize>, usize> {
    all_subsets(a).into_iter().map(|r| (r.closure, r.dim)).collect()
}

/// `χ(t) = Σ_{S : ∩S ≠ ∅} (-1)^{|S|} t^{dim ∩S}`, ascending coefficients.
pub fn whitney_char_poly(a: &Arrangement) -> Vec<i64> {
    let mut coeffs = vec![0i64; a.ambient_dim() + 1];
    for r in all_subsets(a) {
        coeffs[r.dim] += if r.size % 2 == 0 { 1 } else { -1 };
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// Crosscut form of `μ(0̂, X)`: `Σ (-1)^{|S|}` over sub-collections cutting
/// out exactly `X`.
pub fn crosscut_mobius(a: &Arrangement) -> BTreeMap<BTreeSet<usize>, i64> {
    let mut mu = BTreeMap::new();
    for r in all_subsets(a) {
        *mu.entry(r.closure).or_insert(0) += if r.size % 2 == 0 { 1 } else { -1 };
    }
    mu
}

/// Hall's theorem: `μ(0̂, x) = Σ_k (-1)^k c_k` where `c_k` counts chains
/// `0̂ = x_0 < x_1 < ... < x_k = x`.
pub fn hall_mobius(p: &IntersectionPoset, x: usize) -> i64 {
    fn chains(p: &IntersectionPoset, from: usize, to: usize, sign: i64) -> i64 {
        if from == to {
            return sign;
        }
        (0..p.len())
            .filter(|&y| p.less(from, y) && p.leq(y, to))
            .map(|y| chains(p, y, to, -sign))
            .sum()
    }
    chains(p, IntersectionPoset::BOTTOM, x, 1)
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    // Laplace expansion; inputs are at most 3x3.
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 { term } else { -term }
            })
            .sum(),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|first| {
            combinations(n, k - 1)
                .into_iter()
                .filter(move |rest| rest.iter().all(|&r| r > first))
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Determinantal divisors `D_k = gcd` of all `k x k` minors, `k = 1..=min`.
pub fn determinantal_divisors(m: &IntegerMatrix) -> Vec<BigInt> {
    let size = m.rows().min(m.cols());
    (1..=size)
        .map(|k| {
            let mut g = BigInt::zero();
            for rows in combinations(m.rows(), k) {
                for cols in combinations(m.cols(), k) {
                    let sub: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| m[(i, j)].clone()).collect())
                        .collect();
                    g = g.gcd(&det(&sub));
                }
            }
            g.abs()
        })
        .collect()
}

/// Random arrangement in `C^dim` with at most `max` hyperplanes and integer
/// coefficients in `-2..=2`. Roughly a third of the hyperplanes are affine.
pub fn random_arrangement(rng: &mut impl rand::Rng, dim: usize, max: usize) -> Arrangement {
    let target = rng.gen_range(1..=max);
    let mut a = Arrangement::empty(dim);
    while a.len() < target {
        let normal: Vec<GaussianRational> = (0..dim).map(|_| GaussianRational::from(rng.gen_range(-2i64..=2))).collect();
        let constant = if rng.gen_bool(1.0 / 3.0) { rng.gen_range(-2i64..=2) } else { 0 };
        let _ = a.push(normal, GaussianRational::from(constant), None);
    }
    a
}

// Command-line harness. Paths are relative to the crate directory, which is
// the working directory of integration tests.

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let argv: Vec<String> = std::iter::once("hyparr").chain(args.iter().copied()).map(String::from).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = hyparr::cli::run(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

pub fn corpus_paths() -> Vec<String> {
    corpus().into_iter().map(|(name, _)| format!("corpus/{name}")).collect()
}

/// Compares against `tests/golden/<name>.json`, or rewrites it when
/// `UPDATE_GOLDEN` is set.
pub fn golden_matches(name: &str, actual: &Value) -> Result<(), String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    let rendered = serde_json::to_string_pretty(actual).unwrap() + "\n";
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &rendered).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|_| format!("missing {}; rerun with UPDATE_GOLDEN=1", path.display()))?;
    if rendered == expected {
        Ok(())
    } else {
        Err(format!("golden mismatch for {name}"))
    }
}

pub fn check_golden(name: &str, actual: &Value) {
    if let Err(e) = golden_matches(name, actual) {
        panic!("{e}");
    }
}

/// `{file: {exit, output}}` over the corpus for one subcommand.
pub fn corpus_golden(command: &[&str]) -> Value {
    let mut map = serde_json::Map::new();
    for path in corpus_paths() {
        let mut args = vec!["--json"];
        args.extend_from_slice(command);
        args.push(&path);
        let o = run(&args);
        if o.code == 2 {
            assert!(o.stdout.is_empty());
            map.insert(path, json!({ "exit": o.code, "stderr": o.stderr }));
            continue;
        }
        let output: Value = serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{path}: {e}\n{}", o.stdout));
        assert_eq!(output["schema"], 1);
        assert_eq!(output["command"], command[0]);
        assert_eq!(output["input"], path.as_str());
        assert!(output["warnings"].is_array());
        map.insert(path, json!({ "exit": o.code, "output": output }));
    }
    Value::Object(map)
}

pub fn parameter_golden(command: &str, ns: &[&str]) -> Value {
    let mut map = serde_json::Map::new();
    for n in ns {
        let o = run(&["--json", command, n]);
        assert_eq!(o.code, 0, "{command} {n}: {}", o.stderr);
        let output: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(output["schema"], 1);
        assert_eq!(output["command"], command);
        map.insert(n.to_string(), output);
    }
    Value::Object(map)
}
