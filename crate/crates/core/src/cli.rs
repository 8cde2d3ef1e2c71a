//! Command-line front end: `expand`, `psi`, `bigpsi`, `verify` and `hasse`.
//!
//! [`run`] writes results to `out` and diagnostics to `err` and returns the
//! process exit code: `0` on success, `1` when `verify` finds a failure and
//! `2` for usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::affine::AffineElement;
use crate::error::{Error, Result};
use crate::hall_littlewood::{expand, specialization_check, w_lambda, Check, HLExpansion, Route};
use crate::hecke::HeckeElement;
use crate::laurent::{format_combination, LaurentPoly};
use crate::psi::{bigpsi_def, psi_strip, tilde_psi, BigPsiRecursion};
use crate::sympoly::SymPoly;
use crate::tableau::{hasse_dot, Filling, Partition};

#[derive(Parser, Debug)]
#[command(
    name = "hlp",
    version,
    about = "Exact Hall-Littlewood polynomials for GL_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand P_lambda(t) in monomials.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Macdonald)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print psi_T for every semistandard tableau of shape lambda.
    Psi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print Psi_T as Hecke algebra elements.
    Bigpsi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        /// A single tableau, rows separated by `/`, e.g. `1,1/3`.
        #[arg(long)]
        tableau: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the invariant suite on every shape with at most `n` rows and weight at most `max-weight`.
    Verify {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
    },
    /// Emit the Hasse diagram of the column crystal B(omega_ell) in DOT.
    Hasse {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Macdonald,
    Hecke,
    PsiLift,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

enum Failure {
    Usage(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "verification failed");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> std::result::Result<(), Failure> {
    match command {
        Command::Expand {
            n,
            lambda,
            route,
            format,
        } => cmd_expand(&Partition::parse(&lambda, n)?, route, format, out),
        Command::Psi { n, lambda, format } => cmd_psi(&Partition::parse(&lambda, n)?, format, out),
        Command::Bigpsi {
            n,
            lambda,
            tableau,
            format,
        } => {
            let lam = Partition::parse(&lambda, n)?;
            let tableaux = match tableau {
                Some(spec) => {
                    let t = Filling::parse_rows(&spec, n)?;
                    if t.shape() != lam {
                        return Err(Failure::Usage(format!(
                            "tableau has shape {} but lambda = {lam}",
                            t.shape()
                        )));
                    }
                    vec![t]
                }
                None => Filling::enumerate_ssyt(&lam),
            };
            cmd_bigpsi(&lam, &tableaux, format, out)
        }
        Command::Verify { n, max_weight } => cmd_verify(n, max_weight, out),
        Command::Hasse { ell, n } => {
            if n == 0 || ell == 0 || ell > n {
                return Err(Failure::Usage(format!(
                    "need 1 <= ell <= n, got ell = {ell}, n = {n}"
                )));
            }
            write!(out, "{}", hasse_dot(ell, n)?)?;
            Ok(())
        }
    }
}

fn expansion_checks(e: &HLExpansion) -> Result<Vec<Check>> {
    let mut checks = vec![
        Check::new("monic", e.is_monic()),
        Check::new("symmetric", e.poly.is_symmetric()),
        Check::new("coefficients in Z[t]", e.poly.is_polynomial_in_t()),
    ];
    checks.extend(specialization_check(e)?);
    Ok(checks)
}

fn cmd_expand(
    lam: &Partition,
    route: RouteArg,
    format: Format,
    out: &mut impl Write,
) -> std::result::Result<(), Failure> {
    let routes: Vec<Route> = match route {
        RouteArg::Macdonald => vec![Route::Macdonald],
        RouteArg::Hecke => vec![Route::Hecke],
        RouteArg::PsiLift => vec![Route::PsiLift],
        RouteArg::All => Route::ALL.to_vec(),
    };
    let expansions = routes
        .iter()
        .map(|&r| expand(lam, r))
        .collect::<Result<Vec<_>>>()?;
    let agree = expansions.iter().all(|e| e.poly == expansions[0].poly);
    let mut reports = Vec::new();
    for e in &expansions {
        let mut checks = expansion_checks(e)?;
        if expansions.len() > 1 {
            checks.push(Check::new("routes agree", agree));
        }
        reports.push((e, checks));
    }
    match format {
        Format::Json => {
            let values: Vec<_> = reports.iter().map(|(e, c)| e.report(c.clone())).collect();
            let json = if values.len() == 1 {
                serde_json::to_string_pretty(&values[0])
            } else {
                serde_json::to_string_pretty(&values)
            };
            writeln!(out, "{}", json.map_err(|e| Failure::Usage(e.to_string()))?)?;
        }
        Format::Text => {
            let first = &expansions[0];
            writeln!(
                out,
                "P_{lam}(t) in {} variables, {} terms",
                lam.n(),
                first.poly.len()
            )?;
            for (mu, c) in first.poly.terms() {
                writeln!(out, "  X{mu}: {c}")?;
            }
            for (e, checks) in &reports {
                let status: Vec<String> = checks
                    .iter()
                    .map(|c| format!("{}={}", c.name, if c.pass { "pass" } else { "FAIL" }))
                    .collect();
                writeln!(out, "route {}: {}", e.route, status.join(", "))?;
            }
            if expansions.len() > 1 {
                writeln!(out, "routes agree: {}", if agree { "yes" } else { "NO" })?;
            }
        }
        Format::Latex => {
            writeln!(
                out,
                "P_{{{}}}(t) = {}",
                latex_tuple(lam),
                latex_sympoly(&expansions[0].poly)
            )?;
            if expansions.len() > 1 {
                writeln!(out, "% routes agree: {}", if agree { "yes" } else { "no" })?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PsiRow {
    tableau: Vec<Vec<u8>>,
    weight: crate::perm::Weight,
    psi: LaurentPoly,
}

fn cmd_psi(
    lam: &Partition,
    format: Format,
    out: &mut impl Write,
) -> std::result::Result<(), Failure> {
    let rows = Filling::enumerate_ssyt(lam)
        .into_iter()
        .map(|t| {
            Ok(PsiRow {
                tableau: t.rows(),
                weight: t.weight(),
                psi: psi_strip(&t)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rows).map_err(|e| Failure::Usage(e.to_string()))?
        )?,
        Format::Text => {
            writeln!(out, "psi_T for T in B({lam}), {} tableaux", rows.len())?;
            for r in &rows {
                writeln!(out, "  {:<12} {}", ytableau(&r.tableau), r.psi)?;
            }
        }
        Format::Latex => {
            for r in &rows {
                writeln!(
                    out,
                    "\\psi_{{\\ytableaushort{{{}}}}} = {} \\\\",
                    ytableau(&r.tableau),
                    latex_laurent(&r.psi)
                )?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BigPsiRow<'a> {
    tableau: Vec<Vec<u8>>,
    bigpsi: &'a HeckeElement,
}

fn cmd_bigpsi(
    lam: &Partition,
    tableaux: &[Filling],
    format: Format,
    out: &mut impl Write,
) -> std::result::Result<(), Failure> {
    let values: Vec<HeckeElement> = tableaux.iter().map(bigpsi_def).collect();
    match format {
        Format::Json => {
            let rows: Vec<BigPsiRow> = tableaux
                .iter()
                .zip(&values)
                .map(|(t, h)| BigPsiRow {
                    tableau: t.rows(),
                    bigpsi: h,
                })
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&rows).map_err(|e| Failure::Usage(e.to_string()))?
            )?;
        }
        Format::Text => {
            writeln!(out, "Psi_T for shape {lam}")?;
            for (t, h) in tableaux.iter().zip(&values) {
                writeln!(out, "  {:<12} {h}", t.ytableau())?;
            }
        }
        Format::Latex => {
            for (t, h) in tableaux.iter().zip(&values) {
                writeln!(
                    out,
                    "\\Psi_{{\\ytableaushort{{{}}}}} = {} \\\\",
                    t.ytableau(),
                    latex_hecke(h)
                )?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    max_n: usize,
    max_weight: usize,
    out: &mut impl Write,
) -> std::result::Result<(), Failure> {
    let mut failures = 0;
    let mut shapes = 0;
    for n in 1..=max_n {
        for lam in Partition::all_up_to(max_weight, n) {
            shapes += 1;
            let failed: Vec<String> = verify_shape(&lam)?
                .into_iter()
                .filter(|c| !c.pass)
                .map(|c| c.name)
                .collect();
            if failed.is_empty() {
                writeln!(out, "ok   n={n} lambda={lam}")?;
            } else {
                failures += 1;
                writeln!(out, "FAIL n={n} lambda={lam}: {}", failed.join(", "))?;
            }
        }
    }
    writeln!(out, "{shapes} shapes checked, {failures} failed")?;
    if failures > 0 {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}

fn verify_shape(lam: &Partition) -> Result<Vec<Check>> {
    let expansions = Route::ALL
        .iter()
        .map(|&r| expand(lam, r))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = expansion_checks(&expansions[0])?;
    checks.push(Check::new(
        "routes agree",
        expansions.iter().all(|e| e.poly == expansions[0].poly),
    ));

    let mut rec = BigPsiRecursion::default();
    let mut sum = AffineElement::zero(lam.n());
    let (mut rec_ok, mut lift_ok) = (true, true);
    for t in Filling::enumerate_ssyt(lam) {
        let psi = bigpsi_def(&t);
        rec_ok &= rec.eval(&t) == psi;
        lift_ok &=
            matches!((tilde_psi(&t), psi_strip(&t)), (Ok(a), Ok(b)) if a == b && a.is_polynomial());
        sum = &sum + &AffineElement::from_parts(t.weight(), psi);
    }
    checks.push(Check::new("definition equals recursion", rec_ok));
    checks.push(Check::new("scalar lift equals psi", lift_ok));
    checks.push(Check::new(
        "1_0 X^lambda expansion",
        AffineElement::one0_xlambda(lam)? == sum,
    ));
    checks.push(Check::new(
        "initial condition",
        bigpsi_def(&Filling::highest_weight(lam)) == HeckeElement::one_lambda(&lam.to_weight()),
    ));
    checks.push(Check::new(
        "W_lambda on 1_0",
        HeckeElement::one_lambda(&lam.to_weight()).project_one0() == w_lambda(lam),
    ));
    Ok(checks)
}

fn ytableau(rows: &[Vec<u8>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join(",")
}

fn latex_tuple(lam: &Partition) -> String {
    lam.to_weight()
        .entries()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Braces exponents and drops `*`: `t^-2*x` becomes `t^{-2} x`.
fn latexify(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '^' if chars.peek() != Some(&'{') => {
                out.push_str("^{");
                if chars.peek() == Some(&'-') {
                    out.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    out.push(*d);
                    chars.next();
                }
                out.push('}');
            }
            '*' => out.push(' '),
            _ => out.push(c),
        }
    }
    out
}

fn latex_laurent(p: &LaurentPoly) -> String {
    latexify(&p.to_string())
}

fn latex_sympoly(p: &SymPoly) -> String {
    let monomial = |mu: &crate::perm::Weight| {
        let s: String = mu
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x_{}", i + 1)
                } else {
                    format!("x_{}^{{{e}}}", i + 1)
                }
            })
            .collect();
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    };
    latexify(&format_combination(
        p.terms().map(|(mu, c)| (monomial(mu), c)),
    ))
}

fn latex_hecke(h: &HeckeElement) -> String {
    let name = |w: &crate::perm::Permutation| {
        let word = w.reduced_word();
        if word.is_empty() {
            "T_{e}".to_string()
        } else {
            format!(
                "T_{{{}}}",
                word.iter().map(|i| format!("s_{i}")).collect::<String>()
            )
        }
    };
    let mut terms: Vec<_> = h.terms().collect();
    terms.sort_by_key(|(w, _)| std::cmp::Reverse(w.length()));
    latexify(&format_combination(
        terms.into_iter().map(|(w, c)| (name(w), c)),
    ))
}
