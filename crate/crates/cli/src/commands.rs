//! One function per subcommand, each turning an input file into a report.

use std::collections::BTreeMap;
use std::path::Path;

use braidforge_core::abelian::{subgroups, FinAbGroup, Subgroup};
use braidforge_core::cyclotomic::{CycloNum, RootExp};
use braidforge_core::fusion::{
    adjoint_subring, all_subrings, fp_dims, integral_part, pointed_part, universal_grading,
    FusionRing, FusionSubring,
};
use braidforge_core::premodular::{
    centralizer, dichotomy_check, gauss_and_charge, gfp_invariants, ising_datum, is_nondegenerate,
    mueger_report, pointed_datum, projective_centralizer, symmetric_and_isotropic, deligne_product,
    PreModularDatum,
};
use braidforge_core::qform::{
    anisotropic_reduction, bicharacter, classify_anisotropic, core, degeneracy, direct_sum,
    isomorphic, isotropic_pairing_condition, isotropic_subgroups, is_weakly_anisotropic,
    odd_prime_condition, orthogonal_complement, quotient_form, restrict, wap_decompose,
    DegeneracyTag, PreMetricGroup,
};
use braidforge_core::rational::{format_q, parse_q, primes_of};
use braidforge_core::report::Check;
use braidforge_core::witt::{gauss_sum, gauss_sum_signed, is_hyperbolic, tau_image, tau_label, tau_plus, witt_add, witt_class, witt_neg, witt_order};
use braidforge_core::{Error, Limits};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::Report;
use crate::schema::{read_json, CharacterJson, CycloJson, DatumJson, QFormJson, RingJson};
use crate::{CatalogOp, Command, Config, FusionOp, PremodularOp, QformOp};

pub enum Produced {
    Report(Report),
    /// A datum file, already serialized.
    Datum(String),
}

pub fn subject(cmd: &Command) -> String {
    let (kind, op, file): (&str, &str, Option<&Path>) = match cmd {
        Command::Qform { op } => match op {
            QformOp::Analyze { file } => ("qform", "analyze", Some(file)),
            QformOp::Classify { file } => ("qform", "classify", Some(file)),
            QformOp::Gauss { file } => ("qform", "gauss", Some(file)),
            QformOp::Witt { file } => ("qform", "witt", Some(file)),
            QformOp::Core { file } => ("qform", "core", Some(file)),
            QformOp::Wap { file } => ("qform", "wap", Some(file)),
        },
        Command::Fusion { op } => match op {
            FusionOp::Check { file } => ("fusion", "check", Some(file)),
            FusionOp::Dims { file } => ("fusion", "dims", Some(file)),
            FusionOp::Grading { file } => ("fusion", "grading", Some(file)),
            FusionOp::Subrings { file } => ("fusion", "subrings", Some(file)),
        },
        Command::Premodular { op } => match op {
            PremodularOp::Report { file } => ("premodular", "report", Some(file)),
            PremodularOp::Centralizer { file, .. } => ("premodular", "centralizer", Some(file)),
            PremodularOp::Gfp { file } => ("premodular", "gfp", Some(file)),
        },
        Command::Catalog { op } => match op {
            CatalogOp::Ising { .. } => ("catalog", "ising", None),
            CatalogOp::Pointed { form, .. } => ("catalog", "pointed", Some(form)),
            CatalogOp::Product { a, .. } => ("catalog", "product", Some(a)),
        },
    };
    match file {
        Some(f) => format!("{kind} {op} {}", f.display()),
        None => format!("{kind} {op}"),
    }
}

pub fn dispatch(cmd: &Command, cfg: &Config) -> Result<Produced, CliError> {
    let limits = cfg.limits();
    let report = |r: Result<(Vec<Check>, Value), CliError>| {
        r.map(|(checks, results)| Produced::Report(Report::new(subject(cmd), &checks, results)))
    };
    match cmd {
        Command::Qform { op } => {
            let file = match op {
                QformOp::Analyze { file }
                | QformOp::Classify { file }
                | QformOp::Gauss { file }
                | QformOp::Witt { file }
                | QformOp::Core { file }
                | QformOp::Wap { file } => file,
            };
            let m = read_json::<QFormJson>(file)?.to_form()?;
            report(match op {
                QformOp::Analyze { .. } => qform_analyze(&m, &limits),
                QformOp::Classify { .. } => qform_classify(&m, &limits),
                QformOp::Gauss { .. } => qform_gauss(&m, &limits),
                QformOp::Witt { .. } => qform_witt(&m, &limits),
                QformOp::Core { .. } => qform_core(&m, &limits),
                QformOp::Wap { .. } => qform_wap(&m, &limits),
            })
        }
        Command::Fusion { op } => {
            let file = match op {
                FusionOp::Check { file }
                | FusionOp::Dims { file }
                | FusionOp::Grading { file }
                | FusionOp::Subrings { file } => file,
            };
            let ring = read_json::<RingJson>(file)?.to_ring()?;
            report(match op {
                FusionOp::Check { .. } => fusion_check(&ring),
                FusionOp::Dims { .. } => fusion_dims(&ring, cfg.tolerance),
                FusionOp::Grading { .. } => fusion_grading(&ring, cfg.tolerance, &limits),
                FusionOp::Subrings { .. } => fusion_subrings(&ring, &limits),
            })
        }
        Command::Premodular { op } => {
            let file = match op {
                PremodularOp::Report { file } | PremodularOp::Centralizer { file, .. } | PremodularOp::Gfp { file } => file,
            };
            let d = read_json::<DatumJson>(file)?.to_datum()?;
            report(match op {
                PremodularOp::Report { .. } => premodular_report(&d, cfg.tolerance, &limits),
                PremodularOp::Centralizer { subring, .. } => {
                    premodular_centralizer(&d, subring, cfg.tolerance, &limits)
                }
                PremodularOp::Gfp { .. } => premodular_gfp(&d, cfg.tolerance),
            })
        }
        Command::Catalog { op } => {
            let d = catalog(op)?;
            let mut s = serde_json::to_string_pretty(&DatumJson::from_datum(&d)).expect("datum serializes");
            s.push('\n');
            Ok(Produced::Datum(s))
        }
    }
}

fn catalog(op: &CatalogOp) -> Result<PreModularDatum, CliError> {
    match op {
        CatalogOp::Ising { zeta, eps } => {
            let z = parse_q(zeta)
                .as_ref()
                .and_then(RootExp::from_q)
                .ok_or_else(|| CliError::Schema(format!("--zeta `{zeta}` is not a fraction")))?;
            let e = match eps.trim_start_matches('+') {
                "1" => 1,
                "-1" => -1,
                other => return Err(CliError::Schema(format!("--eps `{other}` is not ±1"))),
            };
            Ok(ising_datum(z, e)?)
        }
        CatalogOp::Pointed { form, chi } => {
            let m = read_json::<QFormJson>(form)?.to_form()?;
            let chi = match chi {
                Some(p) => Some(read_json::<CharacterJson>(p)?.chi),
                None => None,
            };
            Ok(pointed_datum(&m, chi.as_deref())?)
        }
        CatalogOp::Product { a, b } => {
            let a = read_json::<DatumJson>(a)?.to_datum()?;
            let b = read_json::<DatumJson>(b)?.to_datum()?;
            Ok(deligne_product(&a, &b)?)
        }
    }
}

fn cyclo(x: &CycloNum) -> Value {
    serde_json::to_value(CycloJson::from_num(x)).expect("numbers serialize")
}

fn elements(g: &FinAbGroup, h: &Subgroup) -> Value {
    json!(h.indices().iter().map(|&i| g.coords(i)).collect::<Vec<_>>())
}

fn form_json(m: &PreMetricGroup) -> Value {
    serde_json::to_value(QFormJson::from_form(m)).expect("forms serialize")
}

fn guarded<T>(r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(CliError::from)
}

type Analysis = Result<(Vec<Check>, Value), CliError>;

fn qform_analyze(m: &PreMetricGroup, limits: &Limits) -> Analysis {
    let g = m.group();
    let b = bicharacter(m);
    let n = g.size();
    let mut checks = Vec::new();
    let asym = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| b.get(x, y) != b.get(y, x));
    checks.push(Check::new(
        "bicharacter_symmetric",
        "b(g,h) = b(h,g)",
        asym.is_none(),
        match asym {
            Some((x, y)) => format!("fails at {}, {}", g.element(x), g.element(y)),
            None => format!("{n}² pairs"),
        },
    ));
    let gens: Vec<usize> = (0..g.rank()).map(|j| g.generator(j)).collect();
    let nonadd = (0..n)
        .flat_map(|x| gens.iter().flat_map(move |&e| (0..n).map(move |y| (x, e, y))))
        .find(|&(x, e, y)| b.get(g.add_idx(x, e), y) != b.get(x, y) + b.get(e, y));
    checks.push(Check::new(
        "bicharacter_additive",
        "b(g+g',h) = b(g,h) + b(g',h)",
        nonadd.is_none(),
        format!("{nonadd:?}"),
    ));
    let deg = degeneracy(m);
    let rad = &deg.radical;
    let subs = guarded(subgroups(g, limits))?;
    let bad = subs.iter().find(|h| {
        h.order() * orthogonal_complement(m, h).order() != g.order() * h.intersection(rad).order()
    });
    checks.push(Check::new(
        "orthogonal_counting",
        "|H|·|H^⊥| = |G|·|H ∩ rad b|",
        bad.is_none(),
        format!("{} subgroups", subs.len()),
    ));
    let iso = guarded(isotropic_subgroups(m, limits))?;
    let bad = iso
        .iter()
        .find(|h| !h.subgroup.is_subset_of(&orthogonal_complement(m, &h.subgroup)));
    checks.push(Check::new(
        "isotropic_in_complement",
        "H isotropic ⇒ H ⊆ H^⊥",
        bad.is_none(),
        format!("{} isotropic subgroups", iso.len()),
    ));
    let tag = match deg.tag {
        DegeneracyTag::Nondegenerate => "nondegenerate",
        DegeneracyTag::SlightlyDegenerate => "slightly_degenerate",
        DegeneracyTag::DegenerateOther => "degenerate",
    };
    let results = json!({
        "orders": g.orders(),
        "order": g.order(),
        "metric": m.is_metric(),
        "degeneracy": tag,
        "radical": elements(g, rad),
        "anisotropic": m.is_anisotropic(),
        "isotropic_subgroups": iso.iter().map(|h| json!({
            "elements": elements(g, &h.subgroup),
            "maximal": h.maximal,
            "lagrangian": h.lagrangian,
        })).collect::<Vec<_>>(),
    });
    Ok((checks, results))
}

fn qform_classify(m: &PreMetricGroup, limits: &Limits) -> Analysis {
    let labels = classify_anisotropic(m)?;
    let product: u64 = labels.iter().map(|l| l.order()).product();
    let rebuilt = labels
        .iter()
        .fold(PreMetricGroup::trivial(), |acc, l| direct_sum(&acc, &l.build()));
    let iso = guarded(isomorphic(m, &rebuilt, limits))?.is_some();
    let checks = vec![
        Check::new(
            "label_orders",
            "Π |label| = |G|",
            product == m.order(),
            format!("{product} vs {}", m.order()),
        ),
        Check::new(
            "label_rebuild",
            "⊕ labels ≅ M",
            iso,
            labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + "),
        ),
    ];
    let results = json!({
        "labels": labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "primes": labels.iter().map(|l| l.prime()).collect::<Vec<_>>(),
    });
    Ok((checks, results))
}

fn qform_gauss(m: &PreMetricGroup, limits: &Limits) -> Analysis {
    let g = gauss_sum(m);
    let mut checks = vec![Check::new(
        "conjugate",
        "τ- = conj(τ+)",
        g.tau_minus == g.tau_plus.conj(),
        format!("τ+ = {}, τ- = {}", g.tau_plus, g.tau_minus),
    )];
    if m.is_metric() {
        checks.push(Check::new(
            "norm",
            "τ+·τ- = |G| for metric (G,q)",
            g.norm_check,
            format!("{}", &g.tau_plus * &g.tau_minus),
        ));
    } else {
        checks.push(Check::skipped("norm", "τ+·τ- = |G| for metric (G,q)", "form is degenerate"));
    }
    for h in guarded(isotropic_subgroups(m, limits))?.iter().skip(1) {
        let perp = orthogonal_complement(m, &h.subgroup);
        let sub = quotient_form(&restrict(m, &perp), &pulled_back(m, &perp, &h.subgroup))?;
        let k = CycloNum::from_int(h.subgroup.order() as i64);
        for sign in [1, -1] {
            let lhs = gauss_sum_signed(m.values(), sign);
            let rhs = &gauss_sum_signed(sub.values(), sign) * &k;
            checks.push(Check::new(
                format!("subquotient{}{:?}", if sign == 1 { "+" } else { "-" }, h.subgroup.indices()),
                "τ±(G,q) = |H|·τ±(H^⊥/H) for isotropic H",
                lhs == rhs,
                format!("{lhs} vs {rhs}"),
            ));
        }
    }
    let results = json!({
        "tau_plus": cyclo(&g.tau_plus),
        "tau_minus": cyclo(&g.tau_minus),
        "tau_plus_text": g.tau_plus.to_string(),
        "norm_check": g.norm_check,
        "positive_rational": g.positivity.as_ref().map(format_q),
    });
    Ok((checks, results))
}

// `h` as a subgroup of the restriction of `m` to `perp`.
fn pulled_back(m: &PreMetricGroup, perp: &Subgroup, h: &Subgroup) -> Subgroup {
    let (r, map) = braidforge_core::qform::restrict_with_map(m, perp);
    let members = map
        .iter()
        .enumerate()
        .filter(|(_, &i)| h.contains_idx(i))
        .map(|(j, _)| j)
        .collect();
    Subgroup::from_indices(r.group(), members).expect("H lies in its complement")
}

fn qform_witt(m: &PreMetricGroup, limits: &Limits) -> Analysis {
    let c = witt_class(m)?;
    let lag = guarded(is_hyperbolic(m, limits))?;
    let mut checks = vec![
        Check::new(
            "zero_iff_lagrangian",
            "[M] = 0 ⇔ M has a Lagrangian subgroup",
            c.is_zero() == lag.is_some(),
            format!("class {c}, Lagrangian {}", lag.is_some()),
        ),
        Check::new(
            "negation",
            "[M] + [M̄] = 0",
            witt_add(&c, &witt_neg(&c)).is_zero(),
            format!("-[M] = {}", witt_neg(&c)),
        ),
    ];
    let mut images = BTreeMap::new();
    for p in primes_of(m.order()) {
        let image = tau_image(&c, p)?;
        let part = restrict(m, &m.group().sylow(p));
        let direct = tau_label(&tau_plus(&part), p)?;
        checks.push(Check::new(
            format!("gauss_invariant[{p}]"),
            "τ+ of the p-part and of its anisotropic class agree in C_p/p^Z",
            image == direct,
            format!("{image} vs {direct}"),
        ));
        images.insert(p.to_string(), image.to_string());
    }
    let results = json!({
        "class": c.to_string(),
        "order": witt_order(&c),
        "parts": c.parts.iter().map(|(p, l)| (p.to_string(), l.to_string())).collect::<BTreeMap<_, _>>(),
        "tau_images": images,
        "representative": form_json(&c.representative()),
    });
    Ok((checks, results))
}

fn qform_core(m: &PreMetricGroup, limits: &Limits) -> Analysis {
    let c = guarded(core(m, limits))?;
    let g = m.group();
    let mut checks = vec![
        Check::new(
            "core_anisotropic",
            "H maximal isotropic ⇒ H^⊥/H anisotropic",
            c.form.is_anisotropic(),
            format!("|core| = {}", c.form.order()),
        ),
        Check::new(
            "core_order",
            "|H^⊥/H|·|H|² = |G|·|H ∩ rad b|",
            c.form.order() * c.subgroup.order() * c.subgroup.order()
                == g.order() * c.subgroup.intersection(&degeneracy(m).radical).order(),
            format!("|H| = {}", c.subgroup.order()),
        ),
    ];
    for h in guarded(isotropic_subgroups(m, limits))?.iter().filter(|h| h.maximal) {
        let other = braidforge_core::qform::core_relative(m, &h.subgroup, limits)?;
        let iso = guarded(isomorphic(&c.form, &other.form, limits))?.is_some();
        checks.push(Check::new(
            format!("core_independent{:?}", h.subgroup.indices()),
            "cores from different maximal isotropic subgroups are isomorphic",
            iso,
            format!("|H^⊥/H| = {}", other.form.order()),
        ));
    }
    let results = json!({
        "core": form_json(&c.form),
        "subgroup": elements(g, &c.subgroup),
        "gamma_order": c.gamma.len(),
        "anisotropic_reduction": form_json(&anisotropic_reduction(m)),
    });
    Ok((checks, results))
}

fn qform_wap(m: &PreMetricGroup, limits: &Limits) -> Analysis {
    let mut checks = Vec::new();
    let mut per_prime = BTreeMap::new();
    for p in primes_of(m.order()) {
        let part = restrict(m, &m.group().sylow(p));
        let i = guarded(is_weakly_anisotropic(&part, limits))?;
        let dec = wap_decompose(&part);
        let iii = guarded(isotropic_pairing_condition(&part, limits))?;
        let iv = (p != 2).then(|| odd_prime_condition(&part));
        let ok = i == dec.is_some() && i == iii && iv.is_none_or(|v| v == i);
        checks.push(Check::new(
            format!("wap_equivalence[{p}]"),
            "weakly anisotropic ⇔ hyperbolic planes ⊕ anisotropic ⇔ isotropic pairing (⇔ pG = 0 and metric, p odd)",
            ok,
            format!("(i) {i}, (ii) {}, (iii) {iii}, (iv) {iv:?}", dec.is_some()),
        ));
        if let Some(d) = &dec {
            let iso = guarded(isomorphic(&d.reassemble(), &part, limits))?.is_some();
            checks.push(Check::new(
                format!("wap_reassemble[{p}]"),
                "the decomposition reassembles to M_p",
                iso,
                format!("{} planes", d.hyperbolic.values().sum::<usize>()),
            ));
        }
        per_prime.insert(
            p.to_string(),
            json!({
                "weakly_anisotropic": i,
                "hyperbolic_planes": dec.as_ref().map(|d| d.hyperbolic.values().sum::<usize>()),
                "anisotropic_part": dec.as_ref().map(|d| form_json(&d.anisotropic)),
            }),
        );
    }
    let wa = per_prime.values().all(|v| v["weakly_anisotropic"] == json!(true));
    checks.push(Check::new(
        "sylow_reduction",
        "M is weakly anisotropic iff each p-part is",
        guarded(is_weakly_anisotropic(m, limits))? == wa,
        format!("{wa}"),
    ));
    Ok((checks, json!({ "weakly_anisotropic": wa, "primes": per_prime })))
}

fn fusion_check(ring: &FusionRing) -> Analysis {
    let anchor = "unit, duality, associativity and Frobenius reciprocity of N";
    let checks = vec![Check::new("ring_axioms", anchor, true, format!("rank {}", ring.rank()))];
    let inv = pointed_part(ring);
    let results = json!({
        "rank": ring.rank(),
        "commutative": ring.is_commutative(),
        "invertibles": inv.indices().iter().map(|&i| ring.label(i)).collect::<Vec<_>>(),
    });
    Ok((checks, results))
}

fn fusion_dims(ring: &FusionRing, tol: f64) -> Analysis {
    let fp = fp_dims(ring, tol)?;
    let r = ring.rank();
    let mut worst = 0f64;
    for x in 0..r {
        for y in 0..r {
            let rhs: f64 = ring.constituents(x, y).map(|z| ring.n(x, y, z) as f64 * fp.fpdim[z]).sum();
            worst = worst.max((fp.fpdim[x] * fp.fpdim[y] - rhs).abs() / rhs);
        }
    }
    let checks = vec![Check::new(
        "fp_character",
        "FPdim(X)·FPdim(Y) = Σ N_XY^Z FPdim(Z)",
        worst <= tol,
        format!("worst relative error {worst:e}"),
    )];
    let integral = integral_part(ring, &fp);
    let results = json!({
        "fpdim": fp.fpdim,
        "total": fp.total,
        "weakly_integral": integral.is_ok(),
        "integral_part": integral.ok().map(|s| s.indices().to_vec()),
    });
    Ok((checks, results))
}

fn fusion_grading(ring: &FusionRing, tol: f64, limits: &Limits) -> Analysis {
    let gr = guarded(universal_grading(ring, limits))?;
    let ad = adjoint_subring(ring)?;
    let fp = fp_dims(ring, tol)?;
    let viol = gr.violation(ring);
    let (whole, adj) = (fp.total, fp.of(&ad));
    let u = gr.group.order() as f64;
    let checks = vec![
        Check::new(
            "grading_respects_fusion",
            "N_XY^Z > 0 ⇒ deg Z = deg X + deg Y",
            viol.is_none(),
            format!("{viol:?}"),
        ),
        Check::new(
            "trivial_component_adjoint",
            "trivial component of the universal grading = adjoint subring",
            gr.trivial_component() == ad,
            format!("{:?}", ad.indices()),
        ),
        Check::new("faithful", "every degree occurs", gr.is_faithful(), gr.group.orders().iter().map(ToString::to_string).collect::<Vec<_>>().join("×")),
        Check::new(
            "graded_dimension",
            "FPdim(C) = |U|·FPdim(C_ad)",
            (whole - u * adj).abs() <= tol * whole,
            format!("{whole} vs {u}·{adj}"),
        ),
    ];
    let results = json!({
        "group": gr.group.orders(),
        "degrees": gr.deg.iter().map(|&i| gr.group.coords(i)).collect::<Vec<_>>(),
        "adjoint": ad.indices(),
    });
    Ok((checks, results))
}

fn fusion_subrings(ring: &FusionRing, limits: &Limits) -> Analysis {
    let lat = guarded(all_subrings(ring, limits))?;
    let checks = vec![match lat.modular {
        Some(ok) => Check::new(
            "modular_law",
            "A ≤ C ⇒ A ∨ (B ∧ C) = (A ∨ B) ∧ C",
            ok,
            format!("{:?}", lat.modular_violations().first()),
        ),
        None => Check::skipped("modular_law", "A ≤ C ⇒ A ∨ (B ∧ C) = (A ∨ B) ∧ C", "noncommutative ring"),
    }];
    let results = json!({
        "subrings": lat.subrings.iter().map(|s| s.indices().to_vec()).collect::<Vec<_>>(),
        "meet": lat.meet,
        "join": lat.join,
    });
    Ok((checks, results))
}

fn s_json(d: &PreModularDatum) -> Value {
    json!(d.s_matrix().iter().map(|row| row.iter().map(cyclo).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn premodular_report(d: &PreModularDatum, tol: f64, limits: &Limits) -> Analysis {
    let inv = guarded(gauss_and_charge(d, limits))?;
    let mut checks = inv.checks.clone();
    let lattice = guarded(all_subrings(d.ring(), limits))?;
    let fp = fp_dims(d.ring(), tol)?;
    for k in &lattice.subrings {
        let dich = dichotomy_check(d, k);
        checks.push(Check::new(
            format!("dichotomy{:?}", k.indices()),
            "s̃_YV = 1 for all Y ∈ D, or Σ_{Y∈D} d(Y)² s̃_YV = 0",
            dich.violations.is_empty(),
            format!("violations {:?}", dich.violations),
        ));
        let pc = projective_centralizer(d, k);
        checks.push(Check::new(
            format!("projective_centralizer{:?}", k.indices()),
            "(D_ad)' = (D')^co",
            pc.is_ok(),
            match &pc {
                Ok(s) => format!("{:?}", s.indices()),
                Err(e) => e.to_string(),
            },
        ));
        let c = guarded(centralizer(d, k));
        checks.push(Check::new(
            format!("centralizer_rank{:?}", k.indices()),
            "rank S̃_D = number of D'-components",
            c.is_ok(),
            match &c {
                Ok(c) => format!("rank {}", c.rank_s_tilde),
                Err(e) => e.to_string(),
            },
        ));
        for b in &lattice.subrings {
            for mut check in mueger_report(d, k, b, &fp) {
                check.name = format!("{}{:?}{:?}", check.name, k.indices(), b.indices());
                checks.push(check);
            }
        }
    }
    let results = json!({
        "rank": d.rank(),
        "nondegenerate": inv.nondegenerate,
        "tau_plus": cyclo(&inv.tau_plus),
        "tau_minus": cyclo(&inv.tau_minus),
        "tau_plus_text": inv.tau_plus.to_string(),
        "charge_sq": inv.charge_sq.as_ref().map(cyclo),
        "dim_total": cyclo(&inv.dim_total),
        "s_matrix": s_json(d),
    });
    Ok((checks, results))
}

fn premodular_centralizer(d: &PreModularDatum, subring: &[usize], tol: f64, limits: &Limits) -> Analysis {
    if let Some(&i) = subring.iter().find(|&&i| i >= d.rank()) {
        return Err(CliError::Schema(format!("index {i} is out of range for rank {}", d.rank())));
    }
    let k = FusionSubring::from_indices(d.ring(), subring)?;
    let c = centralizer(d, &k)?;
    let fp = fp_dims(d.ring(), tol)?;
    let mut checks = vec![Check::new(
        "centralizer_rank",
        "rank S̃_D = number of D'-components",
        true,
        format!("rank {}, {} components", c.rank_s_tilde, c.components.len()),
    )];
    let dich = dichotomy_check(d, &k);
    checks.push(Check::new(
        "dichotomy",
        "s̃_YV = 1 for all Y ∈ D, or Σ_{Y∈D} d(Y)² s̃_YV = 0",
        dich.violations.is_empty(),
        format!("violations {:?}", dich.violations),
    ));
    let whole = FusionSubring::whole(d.ring());
    checks.extend(mueger_report(d, &k, &whole, &fp));
    let pc = projective_centralizer(d, &k)?;
    let sym = guarded(symmetric_and_isotropic(d, &k, limits))?;
    let results = json!({
        "subring": k.indices(),
        "centralizer": c.centralizer.indices(),
        "components": c.components,
        "rank_s_tilde": c.rank_s_tilde,
        "projective_centralizer": pc.indices(),
        "symmetric": sym.symmetric,
        "isotropic": sym.isotropic,
        "lagrangian_pointed": sym.lagrangian_pointed,
    });
    Ok((checks, results))
}

fn premodular_gfp(d: &PreModularDatum, tol: f64) -> Analysis {
    let nondeg = is_nondegenerate(d)?;
    let g = gfp_invariants(d, tol)?;
    let checks = vec![
        Check::new("nondegenerate", "S̃ invertible", nondeg, format!("rank {}", d.rank())),
        Check::new(
            "gfp_conjugate",
            "T- = conj(T+)",
            g.t_minus == g.t_plus.conj(),
            format!("T+ = {}, T- = {}", g.t_plus, g.t_minus),
        ),
    ];
    let results = json!({
        "x_class": g.x_class,
        "t_plus": cyclo(&g.t_plus),
        "t_minus": cyclo(&g.t_minus),
        "t_plus_text": g.t_plus.to_string(),
        "weights": g.weights.iter().map(|&(x, w)| json!([d.ring().label(x), w])).collect::<Vec<_>>(),
    });
    Ok((checks, results))
}
