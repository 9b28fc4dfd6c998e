use serde_json::{json, Value};
use umx::arrangements::{
    arrangement_umatroid, generic_rank_oracle, multisymmetric_lift, polymatroid_rank, split_space,
    Arrangement,
};
use umx::complexes::{check_basis_system, is_shelling_order, PureComplex};
use umx::extension::{
    generous_atom_extension, generous_extension, independent_zero_one_points,
    magnanimous_extension, restrict, zero_one_points,
};
use umx::io::{self, ArrangementDoc, RankFunctionDoc, SCHEMA};
use umx::lattice::{all_orders, linear_extensions, DistLattice, Poset, Subset, TotalOrder};
use umx::umatroid::{
    bases, closure, dual, flats, is_poset_matroid, vertex_of_chain, Axiom, PosetMatroidMethod,
    PosetMatroidReport, RankFunction, UMatroid,
};
use umx::{Error, Result};

use crate::{read_input, Cli, Command, Method};

/// What a command produced: a table for people, a JSON value for programs,
/// and whether the verdict was positive.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn report(command: &str, text: String, mut json: Value, ok: bool) -> Outcome {
        json["schema"] = json!(SCHEMA);
        json["command"] = json!(command);
        Outcome { text, json, ok }
    }

    /// Transform verbs print the same document in both modes.
    fn document(doc: Value) -> Outcome {
        Outcome {
            text: pretty(&doc),
            json: doc,
            ok: true,
        }
    }

    pub fn json_text(&self) -> String {
        pretty(&self.json)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn set_json(s: Subset) -> Value {
    json!(s.to_vec())
}

fn sets_json(v: &[Subset]) -> Value {
    Value::Array(v.iter().map(|&s| set_json(s)).collect())
}

fn sets_text(v: &[Subset]) -> String {
    let parts: Vec<String> = v.iter().map(Subset::to_string).collect();
    parts.join(" ")
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}');
    t.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a list of non-negative integers: {s:?}")))
        })
        .collect()
}

fn parse_set(s: &str, n: usize) -> Result<Subset> {
    let v = parse_list(s)?;
    if let Some(&e) = v.iter().find(|&&e| e == 0 || e > n) {
        return Err(Error::ElementOutOfRange { elem: e, n });
    }
    Ok(Subset::from_elements(v))
}

fn parse_order(s: &str) -> Result<TotalOrder> {
    TotalOrder::new(parse_list(s)?)
}

fn load_rank(path: &str) -> Result<RankFunction> {
    io::rank_function_from_str(&read_input(path)?)
}

fn load_umatroid(path: &str) -> Result<UMatroid> {
    UMatroid::new(load_rank(path)?)
}

fn load_arrangement(path: &str) -> Result<Arrangement> {
    io::arrangement_from_str(&read_input(path)?)
}

fn load_lattice(target: &str, n: usize) -> Result<DistLattice> {
    let d = if target == "boolean" {
        DistLattice::boolean(n)?
    } else {
        io::lattice_or_poset_from_str(&read_input(target)?)?
    };
    if d.n() != n {
        return Err(Error::GroundSetMismatch(d.n(), n));
    }
    Ok(d)
}

fn rank_doc(r: &RankFunction) -> Value {
    serde_json::to_value(RankFunctionDoc::new(r)).expect("documents serialize")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { input, method } => validate(&input.file, *method),
        Command::Bases { input } => {
            let u = load_umatroid(&input.file)?;
            let b = bases(&u)?;
            Ok(Outcome::report(
                "bases",
                format!("{}\n", sets_text(&b)),
                json!({ "rank": u.total(), "bases": sets_json(&b) }),
                true,
            ))
        }
        Command::Vertices { input, order } => vertices(&input.file, order.as_deref()),
        Command::RankTable { input } => {
            let r = load_rank(&input.file)?;
            let text: String = r.pairs().map(|(s, v)| format!("{s}\t{v}\n")).collect();
            Ok(Outcome {
                text,
                json: rank_doc(&r),
                ok: true,
            })
        }
        Command::Flats { input } => {
            let u = load_umatroid(&input.file)?;
            let f = flats(&u);
            Ok(Outcome::report(
                "flats",
                format!("{}\n", sets_text(f.flats())),
                json!({ "flats": sets_json(f.flats()) }),
                true,
            ))
        }
        Command::Closure { input, set } => {
            let u = load_umatroid(&input.file)?;
            let a = parse_set(set, u.n())?;
            let c = closure(&u, a);
            Ok(Outcome::report(
                "closure",
                format!("{c}\n"),
                json!({ "set": set_json(a), "closure": set_json(c) }),
                true,
            ))
        }
        Command::Dual { input } => {
            let u = load_umatroid(&input.file)?;
            Ok(Outcome::document(rank_doc(dual(&u).rank_function())))
        }
        Command::Restrict { input, to } => {
            let u = load_umatroid(&input.file)?;
            let d = load_lattice(to, u.n())?;
            Ok(Outcome::document(rank_doc(
                restrict(&u, &d)?.rank_function(),
            )))
        }
        Command::Extend {
            input,
            generous,
            magnanimous,
            to,
            atom,
        } => extend(&input.file, *generous, *magnanimous, to, *atom),
        Command::ZeroOnePoints { input, independent } => {
            let u = load_umatroid(&input.file)?;
            let pts = if *independent {
                independent_zero_one_points(&u)?
            } else {
                zero_one_points(&u)?
            };
            Ok(Outcome::report(
                "zero-one-points",
                format!("{}\n", sets_text(&pts)),
                json!({ "independent": independent, "points": sets_json(&pts) }),
                true,
            ))
        }
        Command::ShellingCheck {
            input,
            all_orders,
            order,
        } => shelling_check(&input.file, *all_orders, order.as_deref()),
        Command::BasisSystem { input } => basis_system(&input.file),
        Command::ArrangementRank { input } => {
            let x = load_arrangement(&input.file)?;
            let p = polymatroid_rank(&x)?;
            let pairs = p.pairs();
            let text: String = pairs.iter().map(|(s, r)| format!("{s}\t{r}\n")).collect();
            let ranks: Vec<Value> = pairs
                .iter()
                .map(|(s, r)| json!({ "set": set_json(*s), "rank": r }))
                .collect();
            Ok(Outcome::report(
                "arrangement-rank",
                text,
                json!({ "codims": x.codims(), "ranks": ranks }),
                true,
            ))
        }
        Command::Lift { input } => {
            let x = load_arrangement(&input.file)?;
            let lift = multisymmetric_lift(&polymatroid_rank(&x)?, &x.codims())?;
            Ok(Outcome::document(rank_doc(lift.rank_function())))
        }
        Command::ArrangementUmatroid { input } => {
            let x = load_arrangement(&input.file)?;
            Ok(Outcome::document(rank_doc(
                arrangement_umatroid(&x)?.rank_function(),
            )))
        }
        Command::Split { input, seed, space } => split(&input.file, *seed, *space),
        Command::Oracle {
            input,
            b,
            trials,
            seed,
        } => oracle(&input.file, b, *trials, *seed),
    }
}

fn poset_matroid_json(r: &PosetMatroidReport) -> Value {
    let method = match r.method {
        PosetMatroidMethod::LocalChain => "local-chain",
        PosetMatroidMethod::BasesInLattice => "bases",
    };
    let chains: Vec<Value> = r
        .chain_violations
        .iter()
        .map(|v| json!({ "a": set_json(v.a), "b1": v.b1, "b2": v.b2 }))
        .collect();
    json!({
        "method": method,
        "is_poset_matroid": r.is_poset_matroid(),
        "chain_violations": chains,
        "bases_outside": sets_json(&r.bases_outside),
    })
}

fn validate(path: &str, method: Method) -> Result<Outcome> {
    let r = load_rank(path)?;
    let rep = r.validate();
    let mut text = String::new();
    let mut axioms = Vec::new();
    for ax in Axiom::ALL {
        match rep.violation(ax) {
            None => {
                text.push_str(&format!("{:<15}ok\n", ax.name()));
                axioms.push(json!({ "axiom": ax.name(), "ok": true }));
            }
            Some(v) => {
                text.push_str(&format!("{:<15}FAIL  {} / {}\n", ax.name(), v.a, v.b));
                axioms.push(json!({
                    "axiom": ax.name(),
                    "ok": false,
                    "witness": [set_json(v.a), set_json(v.b)],
                }));
            }
        }
    }
    let valid = rep.is_umatroid();
    text.push_str(&format!(
        "U-matroid: {}\n",
        if valid { "yes" } else { "no" }
    ));
    let mut json = json!({ "is_umatroid": valid, "axioms": axioms });
    if valid {
        let u = UMatroid::new(r)?;
        let m = match method {
            Method::LocalChain => PosetMatroidMethod::LocalChain,
            Method::Bases => PosetMatroidMethod::BasesInLattice,
        };
        let pm = is_poset_matroid(&u, m)?;
        text.push_str(&format!(
            "poset matroid: {}",
            if pm.is_poset_matroid() { "yes" } else { "no" }
        ));
        if !pm.chain_violations.is_empty() {
            let w: Vec<String> = pm.chain_violations.iter().map(|v| v.to_string()).collect();
            text.push_str(&format!("  local chain fails at {}", w.join(" ")));
        }
        if !pm.bases_outside.is_empty() {
            text.push_str(&format!(
                "  bases outside the lattice: {}",
                sets_text(&pm.bases_outside)
            ));
        }
        text.push('\n');
        json["poset_matroid"] = poset_matroid_json(&pm);
    }
    Ok(Outcome::report("validate", text, json, valid))
}

fn bits(x: &[u8]) -> String {
    x.iter().map(|v| v.to_string()).collect()
}

fn vertices(path: &str, order: Option<&str>) -> Result<Outcome> {
    let u = load_umatroid(path)?;
    match order {
        Some(o) => {
            let sigma = parse_order(o)?;
            let x = vertex_of_chain(&u, &sigma)?;
            Ok(Outcome::report(
                "vertices",
                format!("{}\n", bits(&x)),
                json!({ "order": sigma.as_slice(), "vertices": [x] }),
                true,
            ))
        }
        None => {
            let vs: Vec<Vec<u8>> = bases(&u)?
                .into_iter()
                .map(|b| (1..=u.n()).map(|e| u8::from(b.contains(e))).collect())
                .collect();
            let text: Vec<String> = vs.iter().map(|x| bits(x)).collect();
            Ok(Outcome::report(
                "vertices",
                format!("{}\n", text.join(" ")),
                json!({ "vertices": vs }),
                true,
            ))
        }
    }
}

fn extend(
    path: &str,
    generous: bool,
    magnanimous: bool,
    to: &str,
    atom: Option<usize>,
) -> Result<Outcome> {
    if generous == magnanimous {
        return Err(Error::Parse(
            "choose one of --generous or --magnanimous".into(),
        ));
    }
    if magnanimous {
        let r = load_rank(path)?;
        let d = load_lattice(to, r.n())?;
        return Ok(Outcome::document(rank_doc(&magnanimous_extension(&r, &d)?)));
    }
    let u = load_umatroid(path)?;
    let ext = match atom {
        Some(a) => generous_atom_extension(&u, a)?,
        None => generous_extension(&u, &load_lattice(to, u.n())?)?,
    };
    Ok(Outcome::document(rank_doc(ext.matroid.rank_function())))
}

/// A basis-system file, or a rank function whose bases are taken.
fn load_family(path: &str) -> Result<(Poset, PureComplex)> {
    let text = read_input(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    if v.get("bases").is_some() {
        io::basis_system_from_str(&text)
    } else {
        let u = UMatroid::new(io::rank_function_from_str(&text)?)?;
        let c = PureComplex::new(u.n(), &bases(&u)?)?;
        Ok((u.lattice().irr_poset().clone(), c))
    }
}

fn shelling_check(path: &str, every: bool, order: Option<&str>) -> Result<Outcome> {
    let (p, c) = load_family(path)?;
    let orders: Vec<TotalOrder> = match order {
        Some(o) => vec![parse_order(o)?],
        None if every => all_orders(p.n())?.collect(),
        None => linear_extensions(&p)?.collect(),
    };
    let mut text = String::new();
    let mut failures = Vec::new();
    for sigma in &orders {
        if sigma.n() != p.n() {
            return Err(Error::GroundSetMismatch(sigma.n(), p.n()));
        }
        let lex = c.lex_order(sigma);
        let verdict = is_shelling_order(&lex);
        if order.is_some() {
            text.push_str(&format!(
                "{sigma}: {} {}\n",
                sets_text(&lex),
                if verdict.is_ok() {
                    "shelling"
                } else {
                    "not a shelling"
                }
            ));
        }
        if let Err(w) = verdict {
            if order.is_none() {
                text.push_str(&format!("{sigma}: {w}\n"));
            }
            failures.push(json!({
                "order": sigma.as_slice(),
                "lex_order": sets_json(&lex),
                "i": w.i + 1,
                "j": w.j + 1,
            }));
        }
    }
    text.push_str(&format!(
        "{} orders checked, {} not shellings\n",
        orders.len(),
        failures.len()
    ));
    let ok = failures.is_empty();
    Ok(Outcome::report(
        "shelling-check",
        text,
        json!({
            "scope": if order.is_some() { "single" } else if every { "all" } else { "linear-extensions" },
            "orders_checked": orders.len(),
            "failures": failures,
        }),
        ok,
    ))
}

fn basis_system(path: &str) -> Result<Outcome> {
    let (p, c) = load_family(path)?;
    let r = check_basis_system(&p, &c)?;
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!(
        "lex-minimum map onto:      {}\nunique Gale minimum:       {}\nlex orders are shellings:  {}\nbasis system:              {}\n",
        yn(r.b1),
        yn(r.b2),
        yn(r.b2_prime),
        yn(r.is_basis_system())
    );
    if let Some(s) = r.unreached {
        text.push_str(&format!("never lex-minimal: {s}\n"));
    }
    if let Some(s) = &r.gale_failure {
        text.push_str(&format!("no unique Gale minimum under {s}\n"));
    }
    if let Some((s, w)) = &r.shelling_failure {
        text.push_str(&format!("not a shelling under {s}: {w}\n"));
    }
    let json = json!({
        "b1": r.b1,
        "b2": r.b2,
        "b1_prime": r.b1_prime,
        "b2_prime": r.b2_prime,
        "is_basis_system": r.is_basis_system(),
        "unreached": r.unreached.map(set_json),
        "gale_failure": r.gale_failure.as_ref().map(|s| json!(s.as_slice())),
        "shelling_failure": r.shelling_failure.as_ref().map(|(s, _)| json!(s.as_slice())),
        "rank": r.rank.as_ref().map(rank_doc),
    });
    Ok(Outcome::report(
        "basis-system",
        text,
        json,
        r.is_basis_system(),
    ))
}

fn split(path: &str, seed: u64, space: Option<usize>) -> Result<Outcome> {
    let x = load_arrangement(path)?;
    let i = space.unwrap_or(x.len());
    let rep = split_space(&x, i, seed)?;
    let before = x.codims();
    let after = rep.arrangement.codims();
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let text = format!(
        "split space {i} (seed {seed}, {} draw{}): codims {} -> {}; new atom {}\nsplit U-matroid equals the generous atom extension: yes\n",
        rep.attempts,
        if rep.attempts == 1 { "" } else { "s" },
        list(&before),
        list(&after),
        rep.atom
    );
    let json = json!({
        "seed": seed,
        "space": i,
        "atom": rep.atom,
        "attempts": rep.attempts,
        "codims_before": before,
        "codims_after": after,
        "matches_generous": true,
        "arrangement": serde_json::to_value(ArrangementDoc::new(&rep.arrangement)).expect("serializes"),
    });
    Ok(Outcome::report("split", text, json, true))
}

fn oracle(path: &str, b: &str, trials: usize, seed: u64) -> Result<Outcome> {
    let x = load_arrangement(path)?;
    let b = parse_list(b)?;
    let estimate = generic_rank_oracle(&x, &b, trials, seed)?;
    let u = arrangement_umatroid(&x)?;
    let exact = u.rank(x.lift_index()?.embed(&b)?) as usize;
    let agree = estimate == exact;
    let text = format!(
        "sampled {estimate}, exact {exact} ({trials} trials, seed {seed}){}\n",
        if agree { "" } else { "  MISMATCH" }
    );
    Ok(Outcome::report(
        "oracle",
        text,
        json!({
            "b": b,
            "trials": trials,
            "seed": seed,
            "estimate": estimate,
            "exact": exact,
            "agree": agree,
        }),
        agree,
    ))
}
