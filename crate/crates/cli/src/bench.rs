use std::time::Instant;

use cubesize::generic::{lattice_size_bruteforce_with, width_bruteforce};
use cubesize::reduce2d::reduce_2d;
use cubesize::reduce3d::{reduce_3d, scan_sizes};
use cubesize::sample::random_polytope;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Args, CliError};

/// Largest coordinate range for which the oracle runs.
const ORACLE_MAX_2D: i64 = 10;
const ORACLE_MAX_3D: i64 = 5;

struct Row {
    points: usize,
    e_box: BigInt,
    ls: BigInt,
    w: BigInt,
    iterations: usize,
    /// Total pairs scanned over all rounds (3D only).
    scanned: Option<u64>,
    agrees: Option<bool>,
    us: u128,
}

pub fn run(args: &Args) -> Result<(), CliError> {
    let d = args.dim;
    if d != 2 && d != 3 {
        return Err(CliError::Unsupported(d));
    }
    if args.coord_max < 1 {
        return Err(CliError::Usage("--coord-max must be at least 1".into()));
    }
    let with_oracle = args.coord_max <= if d == 2 { ORACLE_MAX_2D } else { ORACLE_MAX_3D };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut rows = Vec::with_capacity(args.count);
    for _ in 0..args.count {
        let n = rng.gen_range(d + 1..=d + 5);
        let p = random_polytope(&mut rng, d, n, args.coord_max);
        let start = Instant::now();
        let (ls, iterations, scanned) = if d == 2 {
            let red = reduce_2d(&p)?;
            (red.terminal.e_box().clone(), red.iterations, None)
        } else {
            let red = reduce_3d(&p, args.mode())?;
            (
                red.value.clone(),
                red.iterations,
                Some(scan_sizes(&red).iter().sum()),
            )
        };
        let us = if args.no_timing {
            0
        } else {
            start.elapsed().as_micros()
        };
        let w = cubesize::lattice_width(&p)?;
        let agrees = if with_oracle {
            let run = lattice_size_bruteforce_with(&p, &args.oracle())?;
            if !run.conclusive {
                return Err(CliError::Budget(args.budget));
            }
            Some(run.certificate.value == ls && width_bruteforce(&p)? == w)
        } else {
            None
        };
        rows.push(Row {
            points: n,
            e_box: p.e_box(),
            ls,
            w,
            iterations,
            scanned,
            agrees,
            us,
        });
    }

    if args.json {
        let rows: Vec<Value> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                json!({
                    "index": i,
                    "points": r.points,
                    "e_box": r.e_box.to_string().parse::<serde_json::Number>().unwrap(),
                    "ls": r.ls.to_string().parse::<serde_json::Number>().unwrap(),
                    "w": r.w.to_string().parse::<serde_json::Number>().unwrap(),
                    "iterations": r.iterations,
                    "scanned": r.scanned,
                    "oracle_agrees": r.agrees,
                    "us": r.us as u64,
                })
            })
            .collect();
        println!(
            "{}",
            json!({ "dim": d, "seed": args.seed, "coord_max": args.coord_max, "rows": rows })
        );
    } else {
        println!(
            "{:>5} {:>6} {:>5} {:>5} {:>5} {:>6} {:>8} {:>7} {:>9}",
            "#", "points", "e_box", "ls", "w", "iters", "scanned", "oracle", "us"
        );
        for (i, r) in rows.iter().enumerate() {
            let scanned = r.scanned.map_or_else(|| "-".to_string(), |s| s.to_string());
            let agrees = match r.agrees {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "-",
            };
            println!(
                "{:>5} {:>6} {:>5} {:>5} {:>5} {:>6} {:>8} {:>7} {:>9}",
                i, r.points, r.e_box, r.ls, r.w, r.iterations, scanned, agrees, r.us
            );
        }
    }

    let bad = rows.iter().filter(|r| r.agrees == Some(false)).count();
    if bad > 0 {
        return Err(CliError::Mismatch(format!(
            "{bad} of {} instances",
            rows.len()
        )));
    }
    Ok(())
}
