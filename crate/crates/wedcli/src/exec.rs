//! Subcommand execution and report printing.
//!
//! Symbols are interned in a fixed order so that identical inputs always
//! produce identical ids: bracket pairs first (Dyck only), then the
//! sequence or forest files in argument order, then the weight table.
//! Exit codes: 0 for a computed distance (INF included), 1 when the
//! brute-force reference disagrees, 2 for unusable inputs.

use std::path::Path;

use anyhow::{anyhow, Context, Result};
use dyckkit::{dyck_kernel, greedy_preprocess, weighted_dyck_le_k, DyckAlphabet};
use foresttk::{forest_kernel, forest_to_text, parse_forest, weighted_ted_le_k, Forest};
use oracles::{enumerate_dyck_matchings, enumerate_forest_alignments, full_dp_weighted_ed};
use wed_core::{Alphabet, CostValue, WeightMode, WeightTable};

use crate::batch::{run_batch_with_mode, BatchMode};
use crate::cli::{Cli, Command, DyckArgs, StringArgs, TreeArgs, ValidateArgs};
use crate::io::{
    read_list, read_sequence, read_text, render_sequence, token_mode, with_suffix, write_file,
};

pub fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::String(args) => run_string(args),
        Command::Tree(args) => run_tree(args),
        Command::Dyck(args) => run_dyck(args),
        Command::ValidateWeights(args) => run_validate(args),
    }
}

fn load_weights(path: &Path, alpha: &mut Alphabet) -> Result<WeightTable> {
    WeightTable::parse(&read_text(path)?, alpha)
        .with_context(|| format!("parsing {}", path.display()))
}

/// Prints the reference value and reports whether it disagrees.
fn oracle_line(reference: CostValue, reported: CostValue) -> bool {
    println!("oracle {reference}");
    if reference == reported {
        false
    } else {
        eprintln!("oracle disagrees: pipeline {reported}, reference {reference}");
        true
    }
}

fn run_string(args: StringArgs) -> Result<i32> {
    let mode = token_mode(args.bytes, args.chars);
    let k = args.k;
    let mut alpha = Alphabet::new();

    if let Some(list) = &args.batch {
        let mut instances = Vec::new();
        for row in read_list(list, 2)? {
            let x = read_sequence(&row[0], mode, &mut alpha)?;
            let y = read_sequence(&row[1], mode, &mut alpha)?;
            instances.push((x, y));
        }
        let w = load_weights(&args.weights, &mut alpha)?;
        let distances = run_batch_with_mode(&instances, BatchMode::Parallel, |(x, y)| {
            stringed::weighted_ed_le_k(x, y, k as usize, &w)
        });
        let mut code = 0;
        for ((x, y), d) in instances.iter().zip(&distances) {
            println!("distance {d}");
            if args.oracle && oracle_line(full_dp_weighted_ed(x, y, &w).clip(k), *d) {
                code = 1;
            }
        }
        return Ok(code);
    }

    let x = read_sequence(args.x.as_deref().expect("--x is required"), mode, &mut alpha)?;
    let y = read_sequence(args.y.as_deref().expect("--y is required"), mode, &mut alpha)?;
    let w = load_weights(&args.weights, &mut alpha)?;
    let d = stringed::weighted_ed_le_k(&x, &y, k as usize, &w);
    println!("distance {d}");
    if let Some(prefix) = &args.kernel_out {
        let kern = stringed::string_kernel(&x, &y, k as usize);
        write_file(&with_suffix(prefix, ".x"), &render_sequence(&kern.x, mode, &alpha)?)?;
        write_file(&with_suffix(prefix, ".y"), &render_sequence(&kern.y, mode, &alpha)?)?;
    }
    if args.oracle && oracle_line(full_dp_weighted_ed(&x, &y, &w).clip(k), d) {
        return Ok(1);
    }
    Ok(0)
}

fn run_tree(args: TreeArgs) -> Result<i32> {
    let k = args.k;
    let mut alpha = Alphabet::new();
    let load = |path: &Path, alpha: &mut Alphabet| -> Result<Forest> {
        parse_forest(&read_text(path)?, alpha)
            .with_context(|| format!("parsing {}", path.display()))
    };

    if let Some(list) = &args.batch {
        let mut instances = Vec::new();
        for row in read_list(list, 2)? {
            instances.push((load(&row[0], &mut alpha)?, load(&row[1], &mut alpha)?));
        }
        let w = load_weights(&args.weights, &mut alpha)?;
        let distances = run_batch_with_mode(&instances, BatchMode::Parallel, |(f, g)| {
            weighted_ted_le_k(f, g, k as usize, &w)
        });
        let mut code = 0;
        for ((f, g), d) in instances.iter().zip(&distances) {
            println!("distance {d}");
            if args.oracle {
                let reference = enumerate_forest_alignments(f, g, &w)?.clip(k);
                if oracle_line(reference, *d) {
                    code = 1;
                }
            }
        }
        return Ok(code);
    }

    let f = load(args.f.as_deref().expect("--f is required"), &mut alpha)?;
    let g = load(args.g.as_deref().expect("--g is required"), &mut alpha)?;
    let w = load_weights(&args.weights, &mut alpha)?;
    let d = weighted_ted_le_k(&f, &g, k as usize, &w);
    println!("distance {d}");
    if let Some(prefix) = &args.kernel_out {
        let (kf, kg) = forest_kernel(&f, &g, k as usize);
        let mut fx = forest_to_text(&kf, &alpha);
        let mut gx = forest_to_text(&kg, &alpha);
        fx.push('\n');
        gx.push('\n');
        write_file(&with_suffix(prefix, ".x"), fx.as_bytes())?;
        write_file(&with_suffix(prefix, ".y"), gx.as_bytes())?;
    }
    if args.oracle {
        let reference = enumerate_forest_alignments(&f, &g, &w)?.clip(k);
        if oracle_line(reference, d) {
            return Ok(1);
        }
    }
    Ok(0)
}

fn run_dyck(args: DyckArgs) -> Result<i32> {
    let mode = token_mode(args.bytes, args.chars);
    let k = args.k;
    let mut alpha = Alphabet::new();
    let dyck = DyckAlphabet::parse(&read_text(&args.pairs)?, &mut alpha)
        .with_context(|| format!("parsing {}", args.pairs.display()))?;

    if let Some(list) = &args.batch {
        let mut instances = Vec::new();
        for row in read_list(list, 1)? {
            instances.push(read_sequence(&row[0], mode, &mut alpha)?);
        }
        let mut w = load_weights(&args.weights, &mut alpha)?;
        w.set_complement(dyck.pairs())
            .context("installing the bracket involution")?;
        let distances = run_batch_with_mode(&instances, BatchMode::Parallel, |x| {
            weighted_dyck_le_k(x, k as usize, &w)
        });
        let mut code = 0;
        for (x, d) in instances.iter().zip(&distances) {
            println!("distance {d}");
            if args.oracle {
                let reference = enumerate_dyck_matchings(x, &w)?.clip(k);
                if oracle_line(reference, *d) {
                    code = 1;
                }
            }
        }
        return Ok(code);
    }

    let x = read_sequence(args.x.as_deref().expect("--x is required"), mode, &mut alpha)?;
    let mut w = load_weights(&args.weights, &mut alpha)?;
    w.set_complement(dyck.pairs())
        .context("installing the bracket involution")?;
    let d = weighted_dyck_le_k(&x, k as usize, &w);
    println!("distance {d}");
    if let Some(prefix) = &args.kernel_out {
        let kern = dyck_kernel(&greedy_preprocess(&x, &dyck), k as usize, &dyck)?;
        write_file(&with_suffix(prefix, ".x"), &render_sequence(&kern, mode, &alpha)?)?;
    }
    if args.oracle {
        let reference = enumerate_dyck_matchings(&x, &w)?.clip(k);
        if oracle_line(reference, d) {
            return Ok(1);
        }
    }
    Ok(0)
}

fn run_validate(args: ValidateArgs) -> Result<i32> {
    let mode = WeightMode::parse(&args.mode).ok_or_else(|| {
        anyhow!(
            "unknown mode {:?}; expected normalized, quasimetric, or skewmetric",
            args.mode
        )
    })?;
    let mut alpha = Alphabet::new();
    let dyck = match &args.pairs {
        Some(path) => Some(
            DyckAlphabet::parse(&read_text(path)?, &mut alpha)
                .with_context(|| format!("parsing {}", path.display()))?,
        ),
        None => None,
    };
    let mut w = load_weights(&args.weights, &mut alpha)?;
    if let Some(d) = &dyck {
        w.set_complement(d.pairs())
            .context("installing the bracket involution")?;
    }
    let report = w.validate(mode)?;
    if report.ok() {
        println!("ok");
        Ok(0)
    } else {
        print!("{}", report.render(&w));
        Ok(2)
    }
}
