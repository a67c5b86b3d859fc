use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use serde_json::json;
use thiserror::Error;
use vnreg::cert::{verify_text, CertificateRecord};
use vnreg::elementary::{
    check_generalized_inverse, check_weak_inverse, classify_elementary, is_nonregularity_witness, search_weak_inverse,
    ElementaryReport,
};
use vnreg::finite::{
    boxes, count_ca, count_r_by_orbits, enumerate_ca, enumerate_r, finite_nonregularity_witness, submonoid_r_size,
    weak_inverse_finite, ConfigSpace, EquivariantMap,
};
use vnreg::group::FiniteGroup;
use vnreg::linear::{count_regulars, LinearRing};
use vnreg::{Bounds, Certificate, PeriodicConfig, RuleTable, Status};

use crate::{ClassifyArgs, FiniteArgs, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] vnreg::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(vnreg::Error::Unsound(_)) => 1,
            _ => 2,
        }
    }
}

pub enum Outcome {
    Success,
    Failed,
}

type Result<T> = std::result::Result<T, CliError>;

fn emit(text: &str) {
    let mut out = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Witness families and the class representatives they certify.
const WITNESS_TABLE: [(&str, &[u32]); 3] =
    [("1", &[22, 30, 36, 38, 46, 54, 60, 62, 122, 126]), ("10", &[18, 24, 25, 26, 37, 45, 73, 90]), ("100", &[105])];

/// Class representatives with a known elementary weak inverse.
const INVERSE_TABLE: [(u32, u32); 18] = [
    (0, 0),
    (2, 16),
    (4, 4),
    (5, 5),
    (10, 80),
    (11, 85),
    (12, 12),
    (13, 21),
    (14, 85),
    (15, 85),
    (29, 29),
    (35, 49),
    (43, 113),
    (51, 51),
    (76, 76),
    (128, 254),
    (192, 238),
    (200, 200),
];

fn describe(cert: &Certificate) -> String {
    match cert {
        Certificate::Regular { sigma, generalized: true } => format!("sigma = {sigma} (generalized)"),
        Certificate::Regular { sigma, .. } => format!("sigma = {sigma}"),
        Certificate::NonRegular { witness } => format!("witness {witness} (period {})", witness.period()),
        Certificate::Undecided { .. } => String::new(),
    }
}

fn rule_records(report: &ElementaryReport) -> Result<String> {
    let mut out = String::new();
    for r in &report.rules {
        let tau = RuleTable::from_wolfram(r.rule as u32)?;
        let rec = CertificateRecord::new(&tau, Some(r.class_rep), &r.certificate, Some(report.bounds));
        out.push_str(&rec.to_json());
        out.push('\n');
    }
    Ok(out)
}

fn classification_table(report: &ElementaryReport) -> String {
    let b = report.bounds;
    let mut out = String::new();
    let _ =
        writeln!(out, "Elementary CA, weak-inverse radius <= {}, witness period <= {}\n", b.max_radius, b.max_period);
    let _ = writeln!(out, "{:<5}{:<34}{:<8}certificate", "rep", "members", "status");
    for c in &report.classes {
        let members = c.class.members.iter().map(u8::to_string).collect::<Vec<_>>().join(" ");
        let row = format!(
            "{:<5}{:<34}{:<8}{}",
            c.class.representative,
            members,
            c.status().label(),
            describe(&c.certificate)
        );
        let _ = writeln!(out, "{}", row.trim_end());
    }
    let tally = |count: &dyn Fn(Status) -> usize| {
        format!(
            "{} R, {} NR, {} undecided",
            count(Status::Regular),
            count(Status::NonRegular),
            count(Status::Undecided)
        )
    };
    let _ = writeln!(out, "\nclasses: {} ({} total)", tally(&|s| report.class_count(s)), report.classes.len());
    let _ = writeln!(out, "rules:   {} ({} total)", tally(&|s| report.rule_count(s)), report.rules.len());
    out
}

pub fn classify(args: &ClassifyArgs) -> Result<Outcome> {
    let bounds = Bounds { max_radius: args.max_radius as usize, max_period: args.max_period as usize };
    let report = classify_elementary(bounds)?;
    let records = rule_records(&report)?;
    if let Some(path) = &args.out {
        write_file(path, &records)?;
    }
    match args.format {
        Format::Human => emit(&classification_table(&report)),
        Format::Machine => emit(&records),
    }
    Ok(Outcome::Success)
}

pub fn verify(path: &Path) -> Result<Outcome> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    let report = verify_text(&text)?;
    let mut out = String::new();
    for (rec, res) in &report.results {
        let rule = match &rec.rule {
            vnreg::cert::RuleRef::Elementary(n) => format!("eca:{n}"),
            vnreg::cert::RuleRef::Literal(s) => s.clone(),
        };
        match res {
            Ok(()) => {
                let _ = writeln!(out, "ok    {rule}");
            }
            Err(why) => {
                let _ = writeln!(out, "FAIL  {rule}: {why}");
            }
        }
    }
    let _ = writeln!(out, "{} records, {} failed", report.results.len(), report.failures());
    emit(&out);
    Ok(if report.all_passed() { Outcome::Success } else { Outcome::Failed })
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    if let Some(path) = spec.strip_prefix("cayley:") {
        let path = Path::new(path);
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        return Ok(FiniteGroup::parse_cayley(spec, &text)?);
    }
    Ok(FiniteGroup::from_spec(spec)?)
}

fn images_text(space: &ConfigSpace, m: &EquivariantMap) -> String {
    (0..space.len()).map(|x| format!("{}>{}", space.config(x), space.config(m.image(x)))).collect::<Vec<_>>().join(" ")
}

struct Enumerated {
    r_listed: usize,
    ca_total: usize,
    ca_regular: usize,
    oracle_regular: Option<usize>,
}

// the definition of regularity checked directly, for spaces with few maps
const ORACLE_MAP_LIMIT: usize = 4096;

fn enumerate_all(space: &ConfigSpace, cap: usize, certificates: &mut Option<String>) -> Result<Enumerated> {
    let all = enumerate_ca(space, cap)?;
    let mut ca_regular = 0;
    for tau in &all {
        let witness = finite_nonregularity_witness(space, tau);
        if witness.is_none() {
            ca_regular += 1;
        }
        if let Some(out) = certificates.as_mut() {
            let cert = match witness {
                None => format!("regular, phi = {}", images_text(space, &weak_inverse_finite(space, tau)?)),
                Some(y) => format!("non-regular, witness {}", space.config(y)),
            };
            let _ = writeln!(out, "{} : {cert}", images_text(space, tau));
        }
    }
    let oracle_regular = (all.len() <= ORACLE_MAP_LIMIT)
        .then(|| all.iter().filter(|t| all.iter().any(|s| t.compose(s).compose(t) == **t)).count());
    Ok(Enumerated { r_listed: enumerate_r(space, cap)?.len(), ca_total: all.len(), ca_regular, oracle_regular })
}

pub fn finite(args: &FiniteArgs) -> Result<Outcome> {
    let group = load_group(&args.group)?;
    let space = ConfigSpace::new(&group, args.q)?;
    let decomposition = boxes(&space);
    let formula = submonoid_r_size(&space);
    let by_orbits = count_r_by_orbits(&space);
    let ca_total = count_ca(&space);
    let mut certificates = args.certificates.then(String::new);
    let enumerated =
        if space.len() <= args.cap { Some(enumerate_all(&space, args.cap, &mut certificates)?) } else { None };

    let mut ok = formula == by_orbits;
    if let Some(e) = &enumerated {
        ok &= formula == e.r_listed.into() && ca_total == e.ca_total.into();
        ok &= e.oracle_regular.is_none_or(|o| o == e.ca_regular);
    }

    match args.format {
        Format::Machine => {
            let boxes_json: Vec<_> = decomposition
                .boxes
                .iter()
                .map(|b| {
                    json!({
                        "subgroup_order": b.class.representative.order(),
                        "conjugates": b.class.members.len(),
                        "weyl_order": b.class.weyl_order(),
                        "orbit_size": b.orbit_size,
                        "orbits": b.orbit_count,
                        "configs": b.configs.len(),
                    })
                })
                .collect();
            let e = enumerated.as_ref();
            let doc = json!({
                "group": group.name(),
                "order": group.order(),
                "q": args.q,
                "configs": space.len(),
                "boxes": boxes_json,
                "r_formula": formula.to_string(),
                "r_orbits": by_orbits.to_string(),
                "r_enumerated": e.map(|e| e.r_listed),
                "ca_total": ca_total.to_string(),
                "ca_regular": e.map(|e| e.ca_regular),
                "ca_regular_oracle": e.and_then(|e| e.oracle_regular),
                "consistent": ok,
            });
            emit(&format!("{doc}\n"));
        }
        Format::Human => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "group {} (order {}), q = {}, {} configurations",
                group.name(),
                group.order(),
                args.q,
                space.len()
            );
            if group.order() == 1 {
                let _ = writeln!(out, "trivial group: every map of the alphabet is a CA, and all of them are regular");
            }
            let _ = writeln!(
                out,
                "\n{:>4}{:>12}{:>8}{:>8}{:>8}{:>10}",
                "|H|", "conjugates", "|N/H|", "orbit", "alpha", "configs"
            );
            for b in &decomposition.boxes {
                let _ = writeln!(
                    out,
                    "{:>4}{:>12}{:>8}{:>8}{:>8}{:>10}",
                    b.class.representative.order(),
                    b.class.members.len(),
                    b.class.weyl_order(),
                    b.orbit_size,
                    b.orbit_count,
                    b.configs.len()
                );
            }
            let _ = writeln!(out, "\n|R| formula:      {formula}");
            let _ = writeln!(out, "|R| orbit count:  {by_orbits}");
            let _ = writeln!(out, "CA total:         {ca_total}");
            match &enumerated {
                Some(e) => {
                    let _ = writeln!(out, "|R| enumerated:   {}", e.r_listed);
                    let _ = writeln!(out, "CA enumerated:    {}", e.ca_total);
                    let _ = writeln!(out, "regular CA:       {}", e.ca_regular);
                    if let Some(o) = e.oracle_regular {
                        let _ = writeln!(out, "regular (tst=t):  {o}");
                    }
                }
                None => {
                    let _ = writeln!(
                        out,
                        "enumeration skipped: {} configurations exceed the cap of {}",
                        space.len(),
                        args.cap
                    );
                }
            }
            let _ = writeln!(out, "{}", if ok { "consistent" } else { "INCONSISTENT" });
            if let Some(c) = certificates {
                let _ = write!(out, "\n{c}");
            }
            emit(&out);
        }
    }
    Ok(if ok { Outcome::Success } else { Outcome::Failed })
}

pub fn linear_count(n: usize, p: u64, brute: bool, cap: u64, format: Format) -> Result<Outcome> {
    let ring = LinearRing::new(n, p)?;
    let formula = count_regulars(n, p)?;
    let brute_count = if brute { Some(ring.brute_force_count(cap)?) } else { None };
    let ok = brute_count.is_none_or(|b| formula == b.into());
    let size = num_bigint::BigUint::from(p).pow(n as u32);
    match format {
        Format::Machine => {
            let factors: Vec<_> = ring
                .factorization()
                .factors
                .iter()
                .map(|f| json!({"poly": f.poly.to_csv(), "degree": f.degree, "multiplicity": f.multiplicity}))
                .collect();
            let doc = json!({
                "n": n,
                "p": p,
                "factors": factors,
                "elements": size.to_string(),
                "regular": formula.to_string(),
                "brute": brute_count,
                "consistent": ok,
            });
            emit(&format!("{doc}\n"));
        }
        Format::Human => {
            let mut out = String::new();
            let _ = writeln!(out, "x^{n} - 1 over F_{p} = {}", ring.factorization());
            let _ = writeln!(out, "regular elements: {formula} of {size}");
            if let Some(b) = brute_count {
                let verdict = if ok { "agrees" } else { "DISAGREES" };
                let _ = writeln!(out, "exhaustive search: {b} ({verdict})");
            }
            emit(&out);
        }
    }
    Ok(if ok { Outcome::Success } else { Outcome::Failed })
}

pub fn linear_check(n: usize, p: u64, poly: &str, format: Format) -> Result<Outcome> {
    let ring = LinearRing::new(n, p)?;
    let a = ring.parse_csv(poly)?;
    let inverse = ring.is_regular_element(&a)?;
    let nilpotent = ring.is_nilpotent(&a);
    match format {
        Format::Machine => {
            let doc = json!({
                "n": n,
                "p": p,
                "element": a.residue.to_csv(),
                "regular": inverse.is_some(),
                "inverse": inverse.as_ref().map(|b| b.residue.to_csv()),
                "nilpotent": nilpotent,
            });
            emit(&format!("{doc}\n"));
        }
        Format::Human => {
            let mut out = String::new();
            let _ = writeln!(out, "a = {a} in F_{p}[x]/(x^{n} - 1)");
            let _ = writeln!(out, "nilpotent: {}", if nilpotent { "yes" } else { "no" });
            match &inverse {
                Some(b) => {
                    let _ = writeln!(out, "regular: yes, generalized inverse b = {b} ({})", b.residue.to_csv());
                }
                None => {
                    let _ = writeln!(out, "regular: no");
                }
            }
            emit(&out);
        }
    }
    Ok(Outcome::Success)
}

pub fn counterexample(format: Format, out_path: Option<&Path>) -> Result<Outcome> {
    let bundle = vnreg::elementary::counterexample()?;
    let record = CertificateRecord::new(&bundle.tau, None, &bundle.certificate, None);
    let line = format!("{}\n", record.to_json());
    if let Some(path) = out_path {
        write_file(path, &line)?;
    }
    let ok = record.verify().is_ok();
    match format {
        Format::Machine => emit(&line),
        Format::Human => {
            let zero = PeriodicConfig::constant(2, 0)?;
            let alt = PeriodicConfig::parse(2, "01")?;
            let inverse = |t: &RuleTable| -> Result<String> {
                Ok(match search_weak_inverse(t, 1)? {
                    Certificate::Regular { sigma, .. } => sigma.to_string(),
                    _ => "none found".to_string(),
                })
            };
            let mut out = String::new();
            let _ = writeln!(out, "tau1 = {} (keeps the centre when all three cells agree, else 0)", bundle.tau1);
            let _ = writeln!(out, "tau2 = {} (writes 1 on 000, else keeps the centre)", bundle.tau2);
            let _ = writeln!(out, "tau  = tau2 then tau1 = {}", bundle.tau);
            let _ = writeln!(out, "weak inverses: tau1 {}, tau2 {}", inverse(&bundle.tau1)?, inverse(&bundle.tau2)?);
            let _ = writeln!(
                out,
                "({zero})tau = {}, ({alt})tau = {}",
                bundle.tau.apply_periodic(&zero)?,
                bundle.tau.apply_periodic(&alt)?
            );
            let _ = writeln!(out, "tau is not regular: {}", describe(&bundle.certificate));
            let _ = write!(out, "{line}");
            emit(&out);
        }
    }
    Ok(if ok { Outcome::Success } else { Outcome::Failed })
}

pub fn tables() -> Result<Outcome> {
    let mut out = String::new();
    let mut ok = true;
    let _ = writeln!(out, "Non-regularity witnesses");
    for (y, rules) in WITNESS_TABLE {
        let x = PeriodicConfig::parse(2, y)?;
        for &n in rules {
            let good = is_nonregularity_witness(&RuleTable::from_wolfram(n)?, &x)?;
            ok &= good;
            let _ = writeln!(out, "{n:>5}  {y:<5}{}", if good { "ok" } else { "FAIL" });
        }
    }
    let _ = writeln!(out, "\nWeak inverses");
    for (tau, sigma) in INVERSE_TABLE {
        let (t, s) = (RuleTable::from_wolfram(tau)?, RuleTable::from_wolfram(sigma)?);
        let weak = check_weak_inverse(&t, &s)?;
        let generalized = check_generalized_inverse(&t, &s)?;
        ok &= weak;
        let verdict = match (weak, generalized) {
            (true, true) => "generalized",
            (true, false) => "weak",
            _ => "FAIL",
        };
        let _ = writeln!(out, "{tau:>5}  {sigma:<5}{verdict}");
    }
    emit(&out);
    Ok(if ok { Outcome::Success } else { Outcome::Failed })
}
