use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bwclust::ar::{self, Directive};
use bwclust::bwt::{self, Certificate};
use bwclust::criterion;
use bwclust::epi;
use bwclust::language::CircularLanguage;
use bwclust::morphism;
use bwclust::suites;
use bwclust::words::{Alphabet, Perm, Word};

/// Burrows-Wheeler clustering toolbox: transforms, certificates, the
/// bispecial order-condition criterion, and rule-generated languages.
#[derive(Parser)]
#[command(name = "bwclust", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct DirectiveArg {
    /// Directive word as PREFIX:PERIOD (empty prefix allowed, e.g. ":abc").
    #[arg(long)]
    directive: String,
}

impl DirectiveArg {
    fn parse3(&self) -> bwclust::Result<Directive> {
        let d: Directive = self.directive.parse()?;
        if d.alphabet.len() != 3 {
            return Err(bwclust::Error::InvalidDirective(format!(
                "{} uses {} letters; this command expects three",
                d,
                d.alphabet.len()
            )));
        }
        Ok(d)
    }

    fn parse_multi(&self, letters: usize) -> bwclust::Result<Directive> {
        let d: Directive = self.directive.parse()?;
        Directive::new(d.prefix, d.period, Alphabet::lowercase(letters)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Burrows-Wheeler transform of a word.
    Bwt {
        word: String,
        /// Order as a letter string, e.g. "acb" for a < c < b.
        #[arg(long)]
        order: String,
    },
    /// Clustering certificates of a word, for one order or across all
    /// orders on its letters. Exits 1 when there is no certificate.
    Cluster {
        word: String,
        #[arg(long)]
        order: Option<String>,
        /// Decide perfect clustering only.
        #[arg(long)]
        perfect: bool,
    },
    /// Bispecial factors of the circular language of a word, with their
    /// resolutions.
    Bispecials { word: String },
    /// Order-condition criterion report for a word, order and permutation.
    /// Exits 1 on a false verdict.
    Criterion {
        word: String,
        #[arg(long)]
        order: String,
        /// Permutation as an image string over the order's letters in
        /// natural order: "cab" maps a to c, b to a, c to b.
        #[arg(long)]
        pi: String,
    },
    /// Arnoux-Rauzy languages over three letters.
    #[command(subcommand)]
    Ar(ArCommand),
    /// Shortest de-substitution of a word down to a single letter.
    /// Exits 1 when none exists.
    Desub { word: String },
    /// Episturmian languages over three letters.
    #[command(subcommand)]
    Epi(EpiCommand),
    /// Rule languages over larger alphabets.
    #[command(subcommand)]
    Multi(MultiCommand),
    /// Complexity profile of the language of a directive word.
    Complexity {
        #[command(flatten)]
        directive: DirectiveArg,
        /// Largest factor length to report.
        #[arg(long)]
        max: usize,
    },
    /// Exhaustive verification suites. Exits 1 when a suite fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Scale knob; each suite interprets it as its principal range.
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ArCommand {
    /// Standard words and central bispecial at a stage.
    Gen {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        stage: usize,
    },
    /// Landmark stages around the first (c) rule.
    Landmarks {
        #[command(flatten)]
        directive: DirectiveArg,
    },
    /// Length-ranked renaming and step kind at a stage.
    Lms {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        stage: usize,
    },
    /// Non-clustering length bound of the language.
    Bound {
        #[command(flatten)]
        directive: DirectiveArg,
    },
    /// The long perfectly clustering word of the language.
    Longword {
        #[command(flatten)]
        directive: DirectiveArg,
    },
    /// All clustering factors up to a length cap, with certificates.
    Census {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        max: usize,
    },
    /// Membership of a word in the language. Exits 1 on a non-member.
    Member {
        word: String,
        #[command(flatten)]
        directive: DirectiveArg,
    },
    /// Palindromic perfectly clustering word from a seed over {a, c},
    /// optionally extended by prefixing morphisms of a wrapper word.
    Palindromic {
        seed: String,
        #[arg(long, default_value = "")]
        wrap: String,
    },
}

#[derive(Subcommand)]
enum EpiCommand {
    /// Finite or infinite supply of clustering words.
    Check {
        #[command(flatten)]
        directive: DirectiveArg,
    },
    /// Non-clustering length bound in the finite-supply case.
    Bound {
        #[command(flatten)]
        directive: DirectiveArg,
    },
    /// Perfectly clustering witnesses of increasing length in the
    /// infinite-supply case.
    Witnesses {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Two-letter standard words and bispecial at a stage.
    Sturmian {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        stage: usize,
    },
    /// Clustering decision for a binary word. Exits 1 on a non-clustering
    /// word.
    Binary { word: String },
}

#[derive(Subcommand)]
enum MultiCommand {
    /// General and refined non-clustering bounds over r letters.
    Bound {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        letters: usize,
    },
    /// Chain-decomposition supply check over r letters.
    Check {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        letters: usize,
    },
    /// Standard words and central bispecial at a stage over r letters.
    Gen {
        #[command(flatten)]
        directive: DirectiveArg,
        #[arg(long)]
        letters: usize,
        #[arg(long)]
        stage: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Car,
    Rel,
    Sq,
    #[value(name = "list-clist")]
    ListClist,
    Rev,
    Thepi,
}

struct Output {
    format: Format,
    exit: ExitCode,
}

impl Output {
    fn emit(&self, text: String, value: Value) {
        use std::io::Write;
        let line = match self.format {
            Format::Text => text,
            Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
        };
        // exit quietly when the reading end of a pipe goes away
        if writeln!(std::io::stdout(), "{line}").is_err() {
            std::process::exit(0);
        }
    }
}

fn certificate_lines(certs: &[Certificate]) -> String {
    if certs.is_empty() {
        return "no clustering certificate".into();
    }
    certs
        .iter()
        .map(|c| {
            format!(
                "order {} pi {}{} transform {}",
                c.order,
                c.permutation.image_string(),
                if c.is_perfect() { " (perfect)" } else { "" },
                c.transform
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn word_alphabet(word: &Word) -> bwclust::Result<Alphabet> {
    Alphabet::new(word.support())
}

/// Standard words grow geometrically with the stage, so the CLI refuses
/// requests past a sane cap instead of exhausting memory.
fn capped(value: usize, cap: usize) -> bwclust::Result<usize> {
    if value > cap {
        return Err(bwclust::Error::CapExceeded(value, cap));
    }
    Ok(value)
}

const MAX_STAGE: usize = 64;

fn run(cli: Cli) -> bwclust::Result<ExitCode> {
    let mut out = Output { format: cli.format, exit: ExitCode::SUCCESS };
    match cli.command {
        Command::Bwt { word, order } => {
            let word: Word = word.parse()?;
            let order: Alphabet = order.parse()?;
            let transform = bwt::bwt(&word, &order)?;
            out.emit(transform.to_string(), json!({ "transform": transform }));
        }
        Command::Cluster { word, order, perfect } => {
            let word: Word = word.parse()?;
            let orders = match &order {
                Some(o) => vec![o.parse::<Alphabet>()?],
                None => word_alphabet(&word)?.all_orders()?,
            };
            let mut certs = Vec::new();
            for o in &orders {
                certs.extend(bwt::clustering_certificates(&word, o)?);
            }
            if perfect {
                let verdict = certs.iter().any(Certificate::is_perfect);
                out.exit = exit_bool(verdict);
                let perfect_certs: Vec<&Certificate> =
                    certs.iter().filter(|c| c.is_perfect()).collect();
                out.emit(
                    format!("perfectly clustering: {verdict}"),
                    json!({ "perfect": verdict, "certificates": perfect_certs }),
                );
            } else {
                out.exit = exit_bool(!certs.is_empty());
                out.emit(
                    certificate_lines(&certs),
                    json!({ "clusters": !certs.is_empty(), "certificates": certs }),
                );
            }
        }
        Command::Bispecials { word } => {
            let word: Word = word.parse()?;
            let lang = CircularLanguage::new(word)?;
            let resolutions = lang.bispecial_resolutions();
            let text = resolutions
                .iter()
                .map(|g| {
                    let pairs: Vec<String> = g
                        .pairs
                        .iter()
                        .map(|(x, y)| format!("{x}{}{y}", g.center))
                        .collect();
                    format!("{}: {}", g.center, pairs.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            out.emit(
                if text.is_empty() { "none".into() } else { text },
                json!({ "bispecials": resolutions }),
            );
        }
        Command::Criterion { word, order, pi } => {
            let word: Word = word.parse()?;
            let order: Alphabet = order.parse()?;
            let pi = Perm::parse(&pi, &order)?;
            let report = criterion::clustering_by_criterion(&word, &order, &pi)?;
            out.exit = exit_bool(report.verdict);
            let mut text = format!("verdict: {}", report.verdict);
            for v in &report.violations {
                text.push_str(&format!(
                    "\nviolation at bispecial {}: left {} vs {}, right {} vs {}",
                    v.bispecial, v.lefts.0, v.lefts.1, v.rights.0, v.rights.1
                ));
            }
            out.emit(text, serde_json::to_value(&report).expect("serializable"));
        }
        Command::Ar(cmd) => run_ar(cmd, &mut out)?,
        Command::Desub { word } => {
            let word: Word = word.parse()?;
            let found = morphism::desubstitute(&word, &['a', 'b', 'c'])?;
            out.exit = exit_bool(found.is_some());
            match found {
                Some(d) => {
                    let chain: Vec<String> = d.chain.iter().map(|m| m.to_string()).collect();
                    out.emit(
                        format!("{} <- {}", chain.join(" "), d.letter),
                        serde_json::to_value(&d).expect("serializable"),
                    );
                }
                None => out.emit("no de-substitution".into(), json!({ "derivation": null })),
            }
        }
        Command::Epi(cmd) => run_epi(cmd, &mut out)?,
        Command::Multi(cmd) => run_multi(cmd, &mut out)?,
        Command::Complexity { directive, max } => {
            let d = directive.parse3()?;
            let max = capped(max, MAX_STAGE)?;
            let mut gen = ar::Generator::new(&d)?;
            let profile: Vec<(usize, usize)> = (0..=max).map(|n| (n, gen.complexity(n))).collect();
            let text = profile
                .iter()
                .map(|(n, p)| format!("p({n}) = {p}"))
                .collect::<Vec<_>>()
                .join("\n");
            out.emit(text, json!({ "complexity": profile }));
        }
        Command::Verify { suite, max } => {
            let report = match suite {
                Suite::Car => {
                    let m = capped(max.unwrap_or(10), 12)?;
                    suites::criterion_vs_transform(m, capped(m + 4, 16)?)?
                }
                Suite::Rel => suites::length_and_suffix_relations(capped(max.unwrap_or(8), 9)?, 12)?,
                Suite::Sq => suites::square_roots(capped(max.unwrap_or(20), 24)?)?,
                Suite::ListClist => suites::standard_thresholds(capped(max.unwrap_or(8), 9)?, 10)?,
                Suite::Rev => suites::reversal_equivalences(capped(max.unwrap_or(10), 12)?)?,
                Suite::Thepi => suites::split_supply(capped(max.unwrap_or(30), 60)?)?,
            };
            out.exit = exit_bool(report.passed());
            let mut text = format!(
                "suite {}: {} ({} checks, {} failures)",
                report.suite,
                if report.passed() { "pass" } else { "FAIL" },
                report.checked,
                report.failure_count
            );
            for f in &report.failures {
                text.push_str(&format!("\n  {f}"));
            }
            out.emit(text, serde_json::to_value(&report).expect("serializable"));
        }
    }
    Ok(out.exit)
}

fn run_ar(cmd: ArCommand, out: &mut Output) -> bwclust::Result<()> {
    match cmd {
        ArCommand::Gen { directive, stage } => {
            let d = directive.parse3()?;
            let st = ar::evolve(&d, capped(stage, MAX_STAGE)?)?;
            let mut text = String::new();
            for (c, w) in &st.words {
                text.push_str(&format!("{c}: {w} (len {})\n", w.len()));
            }
            text.push_str(&format!("bispecial: {} (len {})", st.bispecial, st.bispecial.len()));
            out.emit(text, serde_json::to_value(&st).expect("serializable"));
        }
        ArCommand::Landmarks { directive } => {
            let d = directive.parse3()?;
            let lm = ar::landmarks(&d)?;
            let text = format!(
                "first b: {}\nfirst c: {}\nlast a before c: {}\nlast b before c: {}\nfirst a after c: {}\nfirst b after c: {}\nearly: {}\nlate: {}\nrun start: {}\nrelabel: {}",
                lm.first_b,
                lm.first_c,
                lm.last_a_before_c,
                lm.last_b_before_c,
                lm.first_a_after_c,
                lm.first_b_after_c,
                lm.early,
                lm.late,
                lm.run_start,
                lm.relabel.image_string(),
            );
            out.emit(text, serde_json::to_value(&lm).expect("serializable"));
        }
        ArCommand::Lms { directive, stage } => {
            let d = directive.parse3()?;
            let t = ar::lms(&d, capped(stage, MAX_STAGE)?)?;
            let text = format!(
                "short: {} = {}\nmiddle: {} = {}\nlong: {} = {}\nstep: {:?}",
                t.short.0, t.short.1, t.middle.0, t.middle.1, t.long.0, t.long.1, t.step
            );
            out.emit(text, serde_json::to_value(&t).expect("serializable"));
        }
        ArCommand::Bound { directive } => {
            let d = directive.parse3()?;
            let bound = ar::non_clustering_bound(&d)?;
            out.emit(bound.to_string(), json!({ "bound": bound }));
        }
        ArCommand::Longword { directive } => {
            let d = directive.parse3()?;
            let word = ar::long_clustering_word(&d)?;
            out.emit(word.to_string(), json!({ "word": word, "length": word.len() }));
        }
        ArCommand::Census { directive, max } => {
            let d = directive.parse3()?;
            let hits = ar::census(&d, max)?;
            let text = hits
                .iter()
                .map(|(w, certs)| format!("{w} (len {}, {} certificates)", w.len(), certs.len()))
                .collect::<Vec<_>>()
                .join("\n");
            let value: Vec<Value> = hits
                .iter()
                .map(|(w, certs)| json!({ "word": w, "certificates": certs }))
                .collect();
            out.emit(
                if text.is_empty() { "none".into() } else { text },
                json!({ "clustering_factors": value }),
            );
        }
        ArCommand::Member { word, directive } => {
            let d = directive.parse3()?;
            let word: Word = word.parse()?;
            let member = ar::is_factor(&d, &word)?;
            out.exit = exit_bool(member);
            out.emit(format!("member: {member}"), json!({ "member": member }));
        }
        ArCommand::Palindromic { seed, wrap } => {
            let seed: Word = seed.parse()?;
            let wrap: Word = wrap.parse()?;
            let base = ar::build_palindromic(&seed)?;
            let word = ar::extend_palindromic(&wrap, &base)?;
            out.emit(word.to_string(), json!({ "word": word, "length": word.len() }));
        }
    }
    Ok(())
}

fn run_epi(cmd: EpiCommand, out: &mut Output) -> bwclust::Result<()> {
    match cmd {
        EpiCommand::Check { directive } => {
            let d = directive.parse3()?;
            let supply = epi::clustering_supply(&d)?;
            let text = match &supply {
                epi::Supply::FinitelyMany => "finitely many clustering words".to_string(),
                epi::Supply::InfinitelyMany { split, tail } => format!(
                    "infinitely many clustering words (tail from stage {split} over {})",
                    tail.iter().collect::<String>()
                ),
            };
            out.emit(text, serde_json::to_value(&supply).expect("serializable"));
        }
        EpiCommand::Bound { directive } => {
            let d = directive.parse3()?;
            let bound = epi::non_clustering_bound(&d)?;
            out.emit(bound.to_string(), json!({ "bound": bound }));
        }
        EpiCommand::Witnesses { directive, count } => {
            let d = directive.parse3()?;
            let ws = epi::clustering_witnesses(&d, capped(count, 32)?)?;
            let text = ws
                .iter()
                .map(|w| format!("{w} (len {})", w.len()))
                .collect::<Vec<_>>()
                .join("\n");
            out.emit(text, json!({ "witnesses": ws }));
        }
        EpiCommand::Sturmian { directive, stage } => {
            let d = directive.parse_multi(2)?;
            let (a, b, w) = epi::sturmian_words(&d, capped(stage, MAX_STAGE)?)?;
            out.emit(
                format!("a: {a}\nb: {b}\nbispecial: {w}"),
                json!({ "a": a, "b": b, "bispecial": w }),
            );
        }
        EpiCommand::Binary { word } => {
            let word: Word = word.parse()?;
            let verdict = epi::binary_clusters(&word)?;
            out.exit = exit_bool(verdict);
            out.emit(format!("clusters: {verdict}"), json!({ "clusters": verdict }));
        }
    }
    Ok(())
}

fn run_multi(cmd: MultiCommand, out: &mut Output) -> bwclust::Result<()> {
    match cmd {
        MultiCommand::Bound { directive, letters } => {
            let d = directive.parse_multi(letters)?;
            let b = epi::multi_non_clustering_bound(&d)?;
            out.emit(
                format!("general: {}\nrefined: {}", b.general, b.refined),
                serde_json::to_value(&b).expect("serializable"),
            );
        }
        MultiCommand::Check { directive, letters } => {
            let d = directive.parse_multi(letters)?;
            let supply = epi::multi_clustering_supply(&d)?;
            let text = match &supply {
                epi::MultiSupply::FinitelyMany => "finitely many clustering words".to_string(),
                epi::MultiSupply::InfinitelyMany { assignment, splits } => format!(
                    "infinitely many clustering words (chain {}, splits {:?})",
                    assignment.iter().collect::<String>(),
                    splits
                ),
            };
            out.emit(text, serde_json::to_value(&supply).expect("serializable"));
        }
        MultiCommand::Gen { directive, letters, stage } => {
            let d = directive.parse_multi(letters)?;
            let st = ar::evolve(&d, capped(stage, MAX_STAGE)?)?;
            let mut text = String::new();
            for (c, w) in &st.words {
                text.push_str(&format!("{c}: {w} (len {})\n", w.len()));
            }
            text.push_str(&format!("bispecial: {} (len {})", st.bispecial, st.bispecial.len()));
            out.emit(text, serde_json::to_value(&st).expect("serializable"));
        }
    }
    Ok(())
}

fn exit_bool(verdict: bool) -> ExitCode {
    if verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
