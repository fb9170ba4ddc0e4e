//! Command-line front end.
//!
//! Exit codes: 0 success (an "independent" verdict is a result, not a
//! failure), 1 usage or parse error, 2 domain error, 3 resource limit,
//! 4 internal verification failure.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::{PolyJson, Polynomial, RingMode, Session};
use crate::cancellation::{cancel_extract_comm, cancel_extract_free, CancellationResult};
use crate::centralizer::{centralizer_root_comm, centralizer_root_free, decompose, Decomposition};
use crate::coeff::FieldSpec;
use crate::cpoly::jacobian_det;
use crate::dependence::{annihilator_oracle, dep_comm, dep_free, DependenceVerdict, Witness};
use crate::error::Error;
use crate::poly::{Alphabet, Monomial, Poly};

#[derive(Parser, Debug)]
#[command(
    name = "zcancel",
    version,
    about = "Exact computations in free associative and commutative polynomial algebras"
)]
struct Cli {
    /// Comma-separated generator names; the order defines the monomial order.
    #[arg(long, global = true, default_value = "x,y")]
    gens: String,
    /// Coefficient field: `q` or `gf:P` for a prime P.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Ring::Free)]
    ring: Ring,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Ring {
    Free,
    Comm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical form of an expression.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print [F, G] = F*G - G*F.
    Commutator {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Decide algebraic dependence of F and G.
    Dep {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Jacobian determinant of F and G in a pair of generators (commutative ring).
    Jacobian {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Generator pair `i,j`, by name or 1-based position.
        #[arg(long)]
        pair: String,
    },
    /// Normalized generator u of the centralizer C(F) = K[u].
    Root {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Coefficients of h with F = h(U), if any.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Search for P(s, t) != 0 with P(F, G) = 0 and bidegree at most (a, b).
    Annihilator {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        bidegree: String,
    },
    /// Run the cancellation pipeline on generators V, W with designated generator Z.
    Cancel {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        z: String,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Runs the CLI on `args` (including the program name) without touching the
/// process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(mut stdout) => {
            stdout.push('\n');
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::rationals());
    }
    let p = s
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Failure::Usage(format!("invalid --field `{s}` (expected q or gf:P)")))?;
    Ok(FieldSpec::prime(p)?)
}

fn parse_pair(s: &str) -> Result<(String, String), Failure> {
    match s.split_once(',') {
        Some((a, b)) => Ok((a.trim().to_string(), b.trim().to_string())),
        None => Err(Failure::Usage(format!(
            "expected two comma-separated values, got `{s}`"
        ))),
    }
}

fn session(cli: &Cli) -> Result<Session, Failure> {
    let field = parse_field(&cli.field)?;
    let names: Vec<&str> = cli.gens.split(',').map(str::trim).collect();
    let alphabet = Alphabet::new(names)?;
    let mode = match cli.ring {
        Ring::Free => RingMode::Free,
        Ring::Comm => RingMode::Commutative,
    };
    Ok(Session::new(field, alphabet, mode))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn coeff_strings(d: &Decomposition) -> Vec<String> {
    d.coefficients.iter().map(ToString::to_string).collect()
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let s = session(cli)?;
    match &cli.command {
        Command::Expand { expr } => {
            let p = s.parse(expr)?;
            Ok(if cli.json { p.to_json() } else { p.to_string() })
        }
        Command::Commutator { f, g } => {
            let c = match (s.parse(f)?, s.parse(g)?) {
                (Polynomial::Free(f), Polynomial::Free(g)) => Polynomial::Free(f.commutator(&g)?),
                (Polynomial::Comm(f), Polynomial::Comm(g)) => Polynomial::Comm(f.commutator(&g)?),
                _ => unreachable!("one session"),
            };
            Ok(if cli.json { c.to_json() } else { c.to_string() })
        }
        Command::Dep { f, g } => {
            let verdict = match (s.parse(f)?, s.parse(g)?) {
                (Polynomial::Free(f), Polynomial::Free(g)) => dep_free(&f, &g)?,
                (Polynomial::Comm(f), Polynomial::Comm(g)) => dep_comm(&f, &g)?,
                _ => unreachable!("one session"),
            };
            Ok(render_verdict(&verdict, &s, cli.json))
        }
        Command::Jacobian { f, g, pair } => {
            if s.mode != RingMode::Commutative {
                return Err(Failure::Usage("jacobian requires --ring comm".into()));
            }
            let (a, b) = parse_pair(pair)?;
            let (i, j) = (generator_position(&s, &a)?, generator_position(&s, &b)?);
            let (Polynomial::Comm(f), Polynomial::Comm(g)) = (s.parse(f)?, s.parse(g)?) else {
                unreachable!("commutative session")
            };
            let jac = Polynomial::Comm(jacobian_det(&f, &g, i, j)?);
            Ok(if cli.json {
                jac.to_json()
            } else {
                jac.to_string()
            })
        }
        Command::Root { f } => match s.parse(f)? {
            Polynomial::Free(f) => {
                let r = centralizer_root_free(&f)?;
                root_output(&f, &r.u, r.kernel_dimension, Polynomial::Free, cli.json)
            }
            Polynomial::Comm(f) => {
                let r = centralizer_root_comm(&f)?;
                root_output(&f, &r.u, r.kernel_dimension, Polynomial::Comm, cli.json)
            }
        },
        Command::Decompose { f, u } => {
            let d = match (s.parse(f)?, s.parse(u)?) {
                (Polynomial::Free(f), Polynomial::Free(u)) => decompose(&f, &u)?,
                (Polynomial::Comm(f), Polynomial::Comm(u)) => decompose(&f, &u)?,
                _ => unreachable!("one session"),
            };
            Ok(if cli.json {
                #[derive(Serialize)]
                struct Out {
                    h: Option<Vec<String>>,
                }
                json(&Out {
                    h: d.as_ref().map(coeff_strings),
                })
            } else {
                d.map_or_else(|| "none".to_string(), |d| d.to_string())
            })
        }
        Command::Annihilator { f, g, bidegree } => {
            let (a, b) = parse_pair(bidegree)?;
            let parse_bound = |x: &str| {
                x.parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("invalid bidegree component `{x}`")))
            };
            let (a, b) = (parse_bound(&a)?, parse_bound(&b)?);
            let found = match (s.parse(f)?, s.parse(g)?) {
                (Polynomial::Free(f), Polynomial::Free(g)) => annihilator_oracle(&f, &g, a, b)?,
                (Polynomial::Comm(f), Polynomial::Comm(g)) => annihilator_oracle(&f, &g, a, b)?,
                _ => unreachable!("one session"),
            };
            Ok(if cli.json {
                #[derive(Serialize)]
                struct Out {
                    bidegree: [usize; 2],
                    p: Option<PolyJson>,
                }
                json(&Out {
                    bidegree: [a, b],
                    p: found.as_ref().map(|ann| PolyJson::from(&ann.p)),
                })
            } else {
                found.map_or_else(|| "none".to_string(), |ann| ann.p.to_string())
            })
        }
        Command::Cancel { v, w, z } => match (s.parse(v)?, s.parse(w)?) {
            (Polynomial::Free(v), Polynomial::Free(w)) => {
                let r = cancel_extract_free(&v, &w, z)?;
                Ok(cancel_output(&r, Polynomial::Free, cli.json))
            }
            (Polynomial::Comm(v), Polynomial::Comm(w)) => {
                let r = cancel_extract_comm(&v, &w, z)?;
                Ok(cancel_output(&r, Polynomial::Comm, cli.json))
            }
            _ => unreachable!("one session"),
        },
    }
}

fn generator_position(s: &Session, token: &str) -> Result<usize, Failure> {
    if let Ok(k) = token.parse::<usize>() {
        return match k {
            1.. if k <= s.alphabet.len() => Ok(k - 1),
            _ => Err(Failure::Usage(format!(
                "generator position {k} out of range"
            ))),
        };
    }
    Ok(s.alphabet.index_of(token)?)
}

fn render_verdict(v: &DependenceVerdict, s: &Session, as_json: bool) -> String {
    let names = s.alphabet.names();
    if as_json {
        #[derive(Serialize)]
        struct JacobianJson {
            pair: [String; 2],
            det: PolyJson,
        }
        #[derive(Serialize)]
        struct FreeOut {
            dependent: bool,
            commutator: PolyJson,
        }
        #[derive(Serialize)]
        struct CommOut {
            dependent: bool,
            jacobians: Vec<JacobianJson>,
        }
        return match &v.witness {
            Witness::Commutator(c) => json(&FreeOut {
                dependent: v.dependent,
                commutator: c.into(),
            }),
            Witness::Jacobians(js) => json(&CommOut {
                dependent: v.dependent,
                jacobians: js
                    .iter()
                    .map(|((i, j), det)| JacobianJson {
                        pair: [names[*i].clone(), names[*j].clone()],
                        det: det.into(),
                    })
                    .collect(),
            }),
        };
    }
    let mut lines = vec![if v.dependent {
        "dependent"
    } else {
        "independent"
    }
    .to_string()];
    match &v.witness {
        Witness::Commutator(c) => lines.push(format!("commutator: {c}")),
        Witness::Jacobians(js) => {
            for ((i, j), det) in js {
                lines.push(format!("J({},{}): {det}", names[*i], names[*j]));
            }
        }
    }
    lines.join("\n")
}

fn root_output<M: Monomial>(
    f: &Poly<M>,
    u: &Poly<M>,
    kernel_dimension: usize,
    wrap: fn(Poly<M>) -> Polynomial,
    as_json: bool,
) -> Result<String, Failure> {
    let h = decompose(f, u)?.ok_or_else(|| {
        Error::InternalVerificationFailure("input does not decompose over its root".into())
    })?;
    let u = wrap(u.clone());
    Ok(if as_json {
        #[derive(Serialize)]
        struct Out {
            u: PolyJson,
            kernel_dimension: usize,
            h: Vec<String>,
        }
        json(&Out {
            u: (&u).into(),
            kernel_dimension,
            h: coeff_strings(&h),
        })
    } else {
        format!("u: {u}\nkernel_dimension: {kernel_dimension}\nh: {h}")
    })
}

fn cancel_output<M: Monomial>(
    r: &CancellationResult<M>,
    wrap: fn(Poly<M>) -> Polynomial,
    as_json: bool,
) -> String {
    let (u, u0, u1) = (wrap(r.u.clone()), wrap(r.u0.clone()), wrap(r.u1.clone()));
    if as_json {
        #[derive(Serialize)]
        struct Out {
            u: PolyJson,
            u0: PolyJson,
            u1: PolyJson,
            h_v: Vec<String>,
            h_w: Vec<String>,
            verified: bool,
        }
        json(&Out {
            u: (&u).into(),
            u0: (&u0).into(),
            u1: (&u1).into(),
            h_v: coeff_strings(&r.h_v),
            h_w: coeff_strings(&r.h_w),
            verified: r.verified,
        })
    } else {
        format!(
            "u: {u}\nu0: {u0}\nu1: {u1}\nh_v: {}\nh_w: {}\nverified: {}",
            r.h_v, r.h_w, r.verified
        )
    }
}
