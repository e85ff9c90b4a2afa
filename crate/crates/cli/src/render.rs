use std::fmt::Write;

use negder::report::AnalysisReport;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering of a report.
pub fn report_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let s = &r.system;
    let _ = writeln!(out, "variables     {}", s.variables.join(" "));
    let _ = writeln!(out, "weights       {}", join(&s.weights));
    for (j, g) in s.equations.iter().enumerate() {
        let _ = writeln!(out, "g{:<12} {g}", j + 1);
    }
    let moved = |perm: &[usize]| perm.iter().enumerate().any(|(i, &p)| i + 1 != p);
    if moved(&s.var_perm) || moved(&s.eq_perm) {
        let _ = writeln!(
            out,
            "reordered     variables {} / equations {}",
            join(&s.var_perm),
            join(&s.eq_perm)
        );
    }
    let _ = writeln!(out, "degrees p     {}", join(&r.degrees));
    let _ = writeln!(out, "orders        {}", join(&r.orders));
    let _ = writeln!(out, "dimension d   {}", r.dimension);
    let _ = writeln!(
        out,
        "complete int. {} (Krull dimension {})",
        yes(r.complete_intersection),
        r.krull_dimension
    );
    let _ = writeln!(out, "isolated      {}", yes(r.isolated));
    let _ = writeln!(out, "normal        {}", yes(r.normal));
    let _ = writeln!(out, "lemma12       {}", join(&r.lemma12.iter().map(|&b| yes(b)).collect::<Vec<_>>()));

    let _ = writeln!(out, "conditions");
    for row in &r.conditions {
        let a = row
            .a
            .as_ref()
            .map_or("-".to_string(), |a| format!("{}^{} in g{}", row.variable, a.m, a.j));
        let b = row.b.as_ref().map_or("-".to_string(), |b| {
            format!("nu = ({}), m = ({})", join(&b.nu), join(&b.m))
        });
        let _ = writeln!(out, "  k = {:<3} A: {:<16} B: {}", row.k, a, b);
    }

    if let (Some(d), Some(nu)) = (r.min_trivial_degree, &r.min_trivial_nu) {
        let _ = writeln!(out, "min trivial   degree {d} at nu = ({})", join(nu));
    }
    match (&r.verdict, &r.verdict_note) {
        (Some(v), _) => {
            let _ = writeln!(
                out,
                "negative derivations: {} (minimal generator degree {})",
                if v.exists { "EXIST" } else { "none" },
                v.min_degree
            );
            for w in &v.witnesses {
                let _ = writeln!(out, "  nu = ({}) degree {}", join(&w.nu), w.degree);
                for (i, q) in w.coefficients.iter().enumerate() {
                    if q != "0" {
                        let _ = writeln!(out, "    d/d{}: {q}", s.variables[i]);
                    }
                }
            }
        }
        (None, Some(note)) => {
            let _ = writeln!(out, "negative derivations: not decided ({note})");
        }
        (None, None) => {}
    }
    if let Some(c) = &r.counterexample {
        let _ = writeln!(out, "certificate");
        let eta_degree = format!("{} ({})", yes(c.eta_degree_is_minus_one), c.eta_degree);
        let rows = [
            ("(a) p = (10, 10)", yes(c.degrees_are_10_10).to_string()),
            ("(b) deg eta = -1", eta_degree),
            ("(c) eta g_j = 0", yes(c.eta_annihilates).to_string()),
            ("(d) complete intersection, d >= 4", yes(c.complete_intersection).to_string()),
            ("(e) isolated", yes(c.isolated).to_string()),
            ("(f) witness nu = (1, 2, 3)", yes(c.negative_witness_123).to_string()),
        ];
        for (label, value) in rows {
            let _ = writeln!(out, "  {label:<36}{value}");
        }
    }
    let _ = writeln!(
        out,
        "engine        {} reduction steps, {} pairs, {} ms",
        r.engine.reduction_steps, r.engine.pairs_considered, r.elapsed_ms
    );
    out
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}
