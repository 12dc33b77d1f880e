use super::{
    deepest_base, CatalogEntry, Mode, DEEP_MIN_ORDER, DEEP_ORDER, DEFAULT_ORDER, MIN_ORDER,
};
use crate::expr;

fn orders(texts: &[&str]) -> (i64, i64) {
    let deep = texts
        .iter()
        .filter_map(|t| expr::parse(t).ok())
        .map(|e| deepest_base(&e))
        .max()
        .unwrap_or(1)
        >= 64;
    if deep {
        (DEEP_ORDER, DEEP_MIN_ORDER)
    } else {
        (DEFAULT_ORDER, MIN_ORDER)
    }
}

struct Builder {
    out: Vec<CatalogEntry>,
}

impl Builder {
    fn push(&mut self, id: &str, mode: Mode, texts: &[&str], statement: &str) -> &mut CatalogEntry {
        let (default_order, min_order) = orders(texts);
        self.out.push(CatalogEntry {
            id: id.to_string(),
            mode,
            default_order,
            min_order,
            max_order: None,
            statement: statement.to_string(),
            note: None,
        });
        self.out.last_mut().unwrap()
    }

    fn eq(&mut self, id: &str, lhs: &str, rhs: &str, statement: &str) -> &mut CatalogEntry {
        let mode = Mode::Equality {
            lhs: lhs.into(),
            rhs: rhs.into(),
            also: Vec::new(),
        };
        self.push(id, mode, &[lhs, rhs], statement)
    }

    fn eq_also(
        &mut self,
        id: &str,
        lhs: &str,
        rhs: &str,
        also: &[&str],
        statement: &str,
    ) -> &mut CatalogEntry {
        let mode = Mode::Equality {
            lhs: lhs.into(),
            rhs: rhs.into(),
            also: also.iter().map(|s| s.to_string()).collect(),
        };
        let mut texts = vec![lhs, rhs];
        texts.extend_from_slice(also);
        self.push(id, mode, &texts, statement)
    }

    fn printed(&mut self, id: &str, lhs: &str, rhs: &str, statement: &str) -> &mut CatalogEntry {
        let mode = Mode::PrintedEquality {
            lhs: lhs.into(),
            rhs: rhs.into(),
        };
        self.push(id, mode, &[lhs, rhs], statement)
    }

    fn cong(
        &mut self,
        id: &str,
        series: &str,
        progressions: &[(i64, i64)],
        modulus: u64,
        statement: &str,
    ) -> &mut CatalogEntry {
        let mode = Mode::Congruence {
            series: series.into(),
            progressions: progressions.to_vec(),
            modulus,
            arg_max: None,
        };
        self.push(id, mode, &[series], statement)
    }

    fn ineq(
        &mut self,
        id: &str,
        series: &str,
        ell: i64,
        r: i64,
        n_start: i64,
        statement: &str,
    ) -> &mut CatalogEntry {
        let mode = Mode::Inequality {
            series: series.into(),
            ell,
            r,
            n_start,
            arg_max: None,
        };
        self.push(id, mode, &[series], statement)
    }

    fn scan(
        &mut self,
        id: &str,
        series: &str,
        ell: i64,
        r: i64,
        modulus: u64,
        statement: &str,
    ) -> &mut CatalogEntry {
        let mode = Mode::Scan {
            series: series.into(),
            ell,
            r,
            modulus,
            arg_max: None,
        };
        self.push(id, mode, &[series], statement)
    }
}

trait Tweak {
    fn order(&mut self, default: i64, max: Option<i64>) -> &mut Self;
    fn note(&mut self, note: &str) -> &mut Self;
    fn arg_max(&mut self, bound: i64) -> &mut Self;
}

impl Tweak for CatalogEntry {
    fn order(&mut self, default: i64, max: Option<i64>) -> &mut Self {
        self.default_order = default;
        self.max_order = max;
        self
    }

    fn note(&mut self, note: &str) -> &mut Self {
        self.note = Some(note.to_string());
        self
    }

    fn arg_max(&mut self, bound: i64) -> &mut Self {
        match &mut self.mode {
            Mode::Congruence { arg_max, .. }
            | Mode::Inequality { arg_max, .. }
            | Mode::Scan { arg_max, .. } => *arg_max = Some(bound),
            _ => {}
        }
        self
    }
}

/// Every catalog entry, in declaration order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut b = Builder { out: Vec::new() };
    products(&mut b);
    dissections(&mut b);
    theta_entries(&mut b);
    g_entries(&mut b);
    mod2(&mut b);
    mod4(&mut b);
    mod8(&mut b);
    relations(&mut b);
    counting(&mut b);
    b.out
}

fn products(b: &mut Builder) {
    b.eq(
        "prod/j-1-q-q4",
        "j(-1,1,4)",
        "J2^2/J1",
        "j(-q; q^4) as an eta quotient",
    );
    b.eq(
        "prod/j-1-q-q2",
        "j(-1,1,2)",
        "J2^5/(J1^2*J4^2)",
        "j(-q; q^2) as an eta quotient",
    );
    b.eq(
        "prod/j-q-q2",
        "j(1,1,2)",
        "J1^2/J2",
        "j(q; q^2) as an eta quotient",
    );
    b.eq(
        "prod/j-q-q4",
        "j(1,1,4)",
        "J1*J4/J2",
        "j(q; q^4) as an eta quotient",
    );
}

fn dissections(b: &mut Builder) {
    b.eq(
        "2-dissection/J2",
        "J1^2",
        "J2*J8^5/(J4^2*J16^2) - 2*q*J2*J16^2/J8",
        "2-dissection of J1^2",
    );
    b.eq(
        "2-dissection/J4",
        "J1^4",
        "J4^10/(J2^2*J8^4) - 4*q*J2^2*J8^4/J4^2",
        "2-dissection of J1^4",
    );
    b.eq(
        "2-dissection/J-2",
        "1/J1^2",
        "J8^5/(J2^5*J16^2) + 2*q*J4^2*J16^2/(J2^5*J8)",
        "2-dissection of 1/J1^2",
    );
    b.eq(
        "2-dissection/J-4",
        "1/J1^4",
        "J4^14/(J2^14*J8^4) + 4*q*J4^2*J8^4/J2^10",
        "2-dissection of 1/J1^4",
    );
    b.eq(
        "eta-68-cor/J-6",
        "1/J1^6",
        "J8*J4^14/(J2^19*J16^2) + 8*q^2*J4^4*J8^3*J16^2/J2^15 + 2*q*(J4^16*J16^2/(J2^19*J8^5) + 2*J4^2*J8^9/(J2^15*J16^2))",
        "2-dissection of 1/J1^6",
    );
    b.eq(
        "eta-68-cor/J-8",
        "1/J1^8",
        "J4^28/(J2^28*J8^8) + 16*q^2*J4^4*J8^8/J2^20 + 8*q*J4^16/J2^24",
        "2-dissection of 1/J1^8",
    );
}

fn theta_entries(b: &mut Builder) {
    b.eq_also(
        "entry25/phi",
        "phi(1)",
        "phi(4) + 2*q*psi(8)",
        &["J2^5/(J1^2*J4^2)"],
        "phi(q) = phi(q^4) + 2q psi(q^8)",
    );
    b.eq(
        "entry25/phi-2",
        "phi(1)^2",
        "phi(2)^2 + 4*q*psi(4)^2",
        "phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2",
    );
    b.eq_also(
        "entry25/phi-negative",
        "neg(phi(1))",
        "phi(4) - 2*q*psi(8)",
        &["J1^2/J2"],
        "phi(-q) = phi(q^4) - 2q psi(q^8)",
    );
    b.eq(
        "entry25/phi-negative-2",
        "neg(phi(1))^2",
        "phi(2)^2 - 4*q*psi(4)^2",
        "phi(-q)^2 = phi(q^2)^2 - 4q psi(q^4)^2",
    );
    b.eq(
        "entry25/psi",
        "psi(1)",
        "J2^2/J1",
        "psi(q) as an eta quotient",
    );
}

fn g_entries(b: &mut Builder) {
    b.eq(
        "g-symmetric/q-q4",
        "g(1,1,4)",
        "g(1,3,4)",
        "g(x; q) = g(q/x; q) at x = q, q^4",
    );
    b.eq(
        "g-symmetric/iq-minus",
        "g(i,1,2)",
        "g(-i,1,2)",
        "g(iq; q^2) = g(-iq; q^2)",
    );
    b.eq(
        "g-symmetric/zetaq",
        "g(z8,1,2)",
        "g(z8^7,1,2)",
        "g(z8 q; q^2) = g(z8^-1 q; q^2)",
    );
    b.eq(
        "g-symmetric/minus-q-q8",
        "g(-1,1,8)",
        "g(-1,7,8)",
        "g(-q; q^8) = g(-q^7; q^8)",
    );
    b.eq(
        "g-symmetric/i-q8",
        "g(i,0,8)",
        "g(-i,8,8)",
        "g(i; q^8) = g(-i q^8; q^8)",
    );

    b.eq(
        "g-lemma/q",
        "g(1,1,2)",
        "-q^(-1) + q^(-1)*g(-1,0,8) - q^2*g(-1,4,8) + J4^5/(q*j(1,1,2)*j(-1,4,4)*J8^2)",
        "g(q; q^2) through g at base q^8",
    );
    b.eq(
        "g-lemma/minus-q",
        "g(-1,1,2)",
        "q^(-1) - q^(-1)*g(-1,0,8) - q^2*g(-1,4,8) - q^(-1)*J4^5/(j(-1,1,2)*j(-1,4,4)*J8^2)",
        "g(-q; q^2) through g at base q^8",
    );
    b.eq(
        "g-lemma/q-q4",
        "g(1,1,4)",
        "-q^(-1) + q*g(-1,2,16) - q^4*g(-1,6,16) + J8^5/(q*j(1,1,4)*j(-1,6,8)*J16^2)",
        "g(q; q^4) through g at base q^16",
    );
    b.eq(
        "g-lemma/zetaq",
        "g(z8,1,2)",
        "-z8^7*q^(-1) + z8^5*q^(-1)*g(i,0,8) - q^2*g(-i,4,8) + J4^5/(z8*q*j(z8,1,2)*j(-i,4,4)*J8^2)",
        "g(z8 q; q^2) through g at base q^8",
    );

    b.eq(
        "g-sum-minus/q-sum",
        "g(1,1,2) + g(-1,1,2)",
        "-2*q^2*g(-1,4,8) + 2*J4^8*J16^2/(J2^4*J8^5)",
        "g(q; q^2) + g(-q; q^2)",
    );
    b.eq(
        "g-sum-minus/q-minus",
        "g(1,1,2) - g(-1,1,2)",
        "-2*q^(-1) + 2*q^(-1)*g(-1,0,8) + q^(-1)*J4^6*J8/(J2^4*J16^2)",
        "g(q; q^2) - g(-q; q^2)",
    );
    b.eq(
        "g-sum-minus/iq-sum",
        "g(i,1,2) + g(-i,1,2)",
        "-2*q^2*g(1,4,8) + 2*J8^3/J4^2",
        "g(iq; q^2) + g(-iq; q^2)",
    );
    b.eq(
        "g-sum-minus/i-minus",
        "g(i,0,1) - g(-i,0,1)",
        "2*i + 2*i*q*g(1,1,4) - i*J2^7/(J1^3*J4^3)",
        "g(i; q) - g(-i; q)",
    )
    .note("j(-1; q^2) = 2 J4^2/J2 leaves the theta quotient with coefficient i");
    b.printed(
        "g-sum-minus/i-minus-printed",
        "g(i,0,1) - g(-i,0,1)",
        "2*i + 2*i*q*g(1,1,4) - 2*i*J2^7/(J1^3*J4^3)",
        "g(i; q) - g(-i; q) with coefficient 2i on the theta quotient",
    );
    b.eq(
        "g-sum-minus/zetaq-sum",
        "g(z8,1,2) + g(-z8,1,2)",
        "-2*q^2*g(i,4,8) + 2*J4^5*J32/(J2^2*J8^2*J16)",
        "g(z8 q; q^2) + g(-z8 q; q^2)",
    )
    .note("x^2 = i q^2 puts g(-i q^4; q^8) = g(i q^4; q^8) on the right");
    b.printed(
        "g-sum-minus/zetaq-sum-printed",
        "g(z8,1,2) + g(-z8,1,2)",
        "-2*q^2*g(-1,4,8) + 2*J4^5*J32/(J2^2*J8^2*J16)",
        "g(z8 q; q^2) + g(-z8 q; q^2) with g(-q^4; q^8) on the right",
    );
    b.eq(
        "g-sum-minus/zetaq-minus",
        "g(z8,1,2) - g(-z8,1,2)",
        "-2*z8^(-1)*q^(-1) - 2*z8*q^(-1)*g(i,0,8) + (z8 + z8^(-1))*q^(-1)*J4^5*J16^2/(J2^2*J8^3*J32)",
        "g(z8 q; q^2) - g(-z8 q; q^2)",
    )
    .note("the g(i; q^8) term carries a factor q^-1");
    b.printed(
        "g-sum-minus/zetaq-minus-printed",
        "g(z8,1,2) - g(-z8,1,2)",
        "-2*z8^(-1)*q^(-1) - 2*z8*g(i,0,8) + (z8 + z8^(-1))*q^(-1)*J4^5*J16^2/(J2^2*J8^3*J32)",
        "g(z8 q; q^2) - g(-z8 q; q^2) with the g(i; q^8) term lacking q^-1",
    );
    b.eq(
        "g-sum-minus/izetaq-sum",
        "g(z8^3,1,2) + g(-z8^3,1,2)",
        "-2*q^2*g(i,4,8) + 2*J4^5*J32/(J2^2*J8^2*J16)",
        "g(z8^3 q; q^2) + g(-z8^3 q; q^2)",
    );
    b.eq(
        "g-sum-minus/izetaq-minus",
        "g(z8^3,1,2) - g(-z8^3,1,2)",
        "2*z8*q^(-1) + 2*z8^(-1)*q^(-1)*g(-i,0,8) - (z8 + z8^(-1))*q^(-1)*J4^5*J16^2/(J2^2*J8^3*J32)",
        "g(z8^3 q; q^2) - g(-z8^3 q; q^2)",
    );

    b.eq(
        "proof/q4-sum",
        "g(1,4,8) + g(-1,4,8)",
        "-2*q^8*g(-1,16,32) + 2*J16^8*J64^2/(J8^4*J32^5)",
        "g(q^4; q^8) + g(-q^4; q^8)",
    );
    b.eq(
        "proof/g-q-q2",
        "g(-1,1,2)",
        "q^(-1) - q^(-1)*g(-1,0,8) - q^2*g(-1,4,8) + J4^8*J16^2/(J2^4*J8^5) - 1/2*q^(-1)*J4^6*J8/(J2^4*J16^2)",
        "g(-q; q^2) with its theta quotient split",
    );
    b.eq(
        "proof/g-add-1",
        "g(-1,0,8) - q^3*g(-1,4,8)",
        "1 + q*g(1,1,2) - 1/2*J2*J4^6/(J1^2*J8^4)",
        "g(-1; q^8) - q^3 g(-q^4; q^8) through g(q; q^2)",
    );
    b.eq(
        "proof/N04-middle",
        "N0(0,4,1,0)",
        "1/4*q*(-2*q^2*(g(1,4,8) + g(-1,4,8)) + 2*J4^8*J16^2/(J2^4*J8^5) + 2*J8^3/J4^2)",
        "odd-rank class 0 mod 4 through g at base q^8",
    )
    .note("stated for the odd-indexed coefficients; checked here as a full series");
    b.eq(
        "proof/add-1",
        "N0(0,4,2,1)",
        "q^5*g(-1,8,16) - q*J8^8*J32^2/(J4^4*J16^5) + 1/2*(J4^3/J2^2 + J4^9/(J2^6*J8^2)) + 2*q*J8^6/(J2^2*J4^3)",
        "odd-rank class 0 mod 4 at 2n+1, dissected form",
    );

    for k in 0..8 {
        let c = if k == 0 {
            "1".to_string()
        } else {
            format!("z8^{k}")
        };
        b.eq_also(
            &format!("g-R/R0-z8-{k}"),
            &format!("R0({c})"),
            &format!("q*g({c},1,2)"),
            &[&format!("R0t({c})")],
            &format!("odd-rank generating function at z = z8^{k} equals q g(z q; q^2)"),
        );
    }

    for (label, c) in [("minus-1", "-1"), ("i", "i"), ("z8", "z8")] {
        b.eq(
            &format!("rank-gen-g/{label}"),
            &format!("R1({c})"),
            &format!("(1 - {c})*(1 + {c}*g({c},0,1))"),
            &format!("rank generating function at z = {c} through g(z; q)"),
        )
        .order(150, Some(150));
    }
}

fn mod2(b: &mut Builder) {
    let rows: [(&str, &str, &str); 14] = [
        (
            "N02-2n1",
            "N0(0,2,2,1)",
            "-q*g(-1,2,4) + J2^8*J8^2/(J1^4*J4^5)",
        ),
        ("N02-4n1", "N0(0,2,4,1)", "J2^9/(J1^6*J4^2)"),
        ("N02-4n3", "N0(0,2,4,3)", "-g(-1,1,2) + 4*J4^6/(J1^2*J2^3)"),
        (
            "N12-2n",
            "N0(1,2,2,0)",
            "-1 + g(-1,0,4) + 1/2*J2^6*J4/(J1^4*J8^2)",
        ),
        (
            "N12-4n",
            "N0(1,2,4,0)",
            "-1 + g(-1,0,2) + 1/2*J2^15/(J1^8*J4^6)",
        ),
        ("N12-4n2", "N0(1,2,4,2)", "2*J2^3*J4^2/J1^4"),
        (
            "N02-8n1",
            "N0(0,2,8,1)",
            "J2^12*J4/(J1^10*J8^2) + 8*q*J2^2*J4^3*J8^2/J1^6",
        ),
        (
            "N02-8n3",
            "N0(0,2,8,3)",
            "q*g(-1,2,4) - J2^8*J8^2/(J1^4*J4^5) + 4*J2^6*J4^5/(J1^8*J8^2)",
        ),
        (
            "N02-8n5",
            "N0(0,2,8,5)",
            "2*(J2^14*J8^2/(J1^10*J4^5) + 2*J4^9/(J1^6*J8^2))",
        ),
        (
            "N02-8n7",
            "N0(0,2,8,7)",
            "-q^(-1) + q^(-1)*g(-1,0,4) + 1/2*q^(-1)*J2^6*J4/(J1^4*J8^2) + 8*J2^8*J8^2/(J1^8*J4)",
        ),
        (
            "N12-8n",
            "N0(1,2,8,0)",
            "-1 + g(-1,0,1) + 1/2*J2^22/(J1^13*J4^8) + 8*q*J4^8/(J1^5*J2^2)",
        ),
        ("N12-8n2", "N0(1,2,8,2)", "2*J2^16/(J1^11*J4^4)"),
        ("N12-8n4", "N0(1,2,8,4)", "4*J2^10/J1^9"),
        ("N12-8n6", "N0(1,2,8,6)", "8*J2^4*J4^4/J1^7"),
    ];
    for (label, lhs, rhs) in rows {
        b.eq(
            &format!("thm-mod2/{label}"),
            lhs,
            rhs,
            &class_statement(lhs),
        );
    }
}

fn mod4(b: &mut Builder) {
    let rows: [(&str, &str, &str); 21] = [
        (
            "N04-2n1",
            "N0(0,4,2,1)",
            "q^5*g(-1,8,16) - q*J8^8*J32^2/(J4^4*J16^5) + 1/2*(J2^8*J8^2/(J1^4*J4^5) + J4^3/J2^2)",
        ),
        ("N04-4n1", "N0(0,4,4,1)", "J2^4*J8^5/(J1^4*J4^2*J16^2)"),
        ("N04-4n3", "N0(0,4,4,3)", "q^2*g(-1,4,8) - J4^8*J16^2/(J2^4*J8^5) + 2*J4^6/(J1^2*J2^3)"),
        ("N04-8n1", "N0(0,4,8,1)", "J2^12*J4/(J1^10*J8^2)"),
        ("N04-8n3", "N0(0,4,8,3)", "q*g(-1,2,4) + 2*J2^6*J4^5/(J1^8*J8^2) - J2^8*J8^2/(J1^4*J4^5)"),
        ("N04-8n5", "N0(0,4,8,5)", "4*J4^9/(J1^6*J8^2)"),
        ("N04-8n7", "N0(0,4,8,7)", "4*J2^8*J8^2/(J1^8*J4)"),
        ("N14-2n", "N0(1,4,2,0)", "-1/2 + 1/2*g(-1,0,4) + 1/4*J2^6*J4/(J1^4*J8^2)"),
        ("N14-4n", "N0(1,4,4,0)", "-1/2 + 1/2*g(-1,0,2) + 1/4*J2^15/(J1^8*J4^6)"),
        ("N14-4n2", "N0(1,4,4,2)", "J2^3*J4^2/J1^4"),
        (
            "N14-8n",
            "N0(1,4,8,0)",
            "-1/2 + 1/2*g(-1,0,1) + 1/4*J2^22/(J1^13*J4^8) + 4*q*J4^8/(J1^5*J2^2)",
        ),
        ("N14-8n2", "N0(1,4,8,2)", "J2^16/(J1^11*J4^4)"),
        ("N14-8n4", "N0(1,4,8,4)", "2*J2^10/J1^9"),
        ("N14-8n6", "N0(1,4,8,6)", "4*J2^4*J4^4/J1^7"),
        (
            "N24-2n1",
            "N0(2,4,2,1)",
            "-q^(-1) + q^(-1)*g(-1,0,16) + 1/2*q^(-1)*J8^6*J16/(J4^4*J32^2) - 1/2*J4^3/J2^2 + 1/2*J2^8*J8^2/(J1^4*J4^5)",
        ),
        ("N24-4n1", "N0(2,4,4,1)", "2*q*J2^4*J16^2/(J1^4*J8)"),
        (
            "N24-4n3",
            "N0(2,4,4,3)",
            "-q^(-1) + q^(-1)*g(-1,0,8) + 1/2*q^(-1)*J4^6*J8/(J2^4*J16^2) + 2*J4^6/(J1^2*J2^3)",
        ),
        ("N24-8n1", "N0(2,4,8,1)", "8*q*J2^2*J4^3*J8^2/J1^6"),
        ("N24-8n3", "N0(2,4,8,3)", "2*J2^6*J4^5/(J1^8*J8^2)"),
        ("N24-8n5", "N0(2,4,8,5)", "2*J2^14*J8^2/(J1^10*J4^5)"),
        (
            "N24-8n7",
            "N0(2,4,8,7)",
            "-q^(-1) + q^(-1)*g(-1,0,4) + 1/2*q^(-1)*J2^6*J4/(J1^4*J8^2) + 4*J2^8*J8^2/(J1^8*J4)",
        ),
    ];
    for (label, lhs, rhs) in rows {
        b.eq(
            &format!("thm-mod4/{label}"),
            lhs,
            rhs,
            &class_statement(lhs),
        );
    }
}

fn mod8(b: &mut Builder) {
    let rows: [(&str, &str, &str); 34] = [
        (
            "N08-2n1",
            "N0(0,8,2,1)",
            "-q^21*g(-1,32,64) + q^5*J32^8*J128^2/(J16^4*J64^5) + 1/4*J2^8*J8^2/(J1^4*J4^5) + 1/4*J4^3/J2^2 + 1/2*J2^5*J16/(J1^2*J4^2*J8) - 1/2*q*J8^8*J32^2/(J4^4*J16^5) - 1/2*q*J16^3/J8^2",
        ),
        ("N08-4n1", "N0(0,8,4,1)", "1/4*(J2^9/(J1^6*J4^2) + J2^3/J1^2 + 2*J4^4/(J8*J2^2))"),
        (
            "N08-4n3",
            "N0(0,8,4,3)",
            "-q^10*g(-1,16,32) + q^2*J16^8*J64^2/(J8^4*J32^5) + 1/2*J8^3/J4^2 + J4^6/(J1^2*J2^3) - 1/2*J4^8*J16^2/(J2^4*J8^5)",
        ),
        (
            "N08-8n1",
            "N0(0,8,8,1)",
            "1/2*J2^4/(J1^2*J4) + 1/4*J4^5/(J1^2*J8^2) + 1/4*J2^12*J4/(J1^10*J8^2) + 2*q*J2^2*J4^3*J8^2/J1^6",
        ),
        (
            "N08-8n3",
            "N0(0,8,8,3)",
            "-q^5*g(-1,8,16) + q*J8^8*J32^2/(J4^4*J16^5) + 1/2*J4^3/J2^2 - 1/2*J2^8*J8^2/(J1^4*J4^5) + J2^6*J4^5/(J1^8*J8^2)",
        ),
        ("N08-8n5", "N0(0,8,8,5)", "2*J4^9/(J1^6*J8^2)"),
        ("N08-8n7", "N0(0,8,8,7)", "2*J2^8*J8^2/(J1^8*J4)"),
        (
            "N18-2n",
            "N0(1,8,2,0)",
            "-1/4 + 1/4*g(-1,0,4) + 1/2*q^4*g(1,4,16) + 1/8*J2^6*J4/(J1^4*J8^2) - 1/4*J8^7/(J4^3*J16^3) + 1/4*J2^5*J8^2/(J1^2*J4^3*J16)",
        ),
        ("N18-4n", "N0(1,8,4,0)", "-1/4 + 1/4*g(-1,0,2) + 1/2*q^2*g(1,2,8) + 1/8*J2^15/(J1^8*J4^6)"),
        ("N18-4n2", "N0(1,8,4,2)", "1/2*(J2^3*J4^2/J1^4 + J4*J8/J2)"),
        (
            "N18-8n",
            "N0(1,8,8,0)",
            "-1/4 + 1/4*g(-1,0,1) + 1/2*q*g(1,1,4) + 1/8*J2^22/(J1^13*J4^8) + 2*q*J4^8/(J1^5*J2^2)",
        ),
        ("N18-8n2", "N0(1,8,8,2)", "1/2*(J2^16/(J1^11*J4^4) + J2*J4/J1)"),
        ("N18-8n4", "N0(1,8,8,4)", "J2^10/J1^9"),
        ("N18-8n6", "N0(1,8,8,6)", "2*J2^4*J4^4/J1^7"),
        (
            "N28-2n1",
            "N0(2,8,2,1)",
            "-1/2*q^(-1) + 1/2*q^(-1)*g(-1,0,16) + 1/4*q^(-1)*J8^6*J16/(J4^4*J32^2) + 1/4*J2^8*J8^2/(J4^5*J1^4) - 1/4*J4^3/J2^2",
        ),
        ("N28-4n1", "N0(2,8,4,1)", "q*J2^4*J16^2/(J1^4*J8)"),
        (
            "N28-4n3",
            "N0(2,8,4,3)",
            "-1/2*q^(-1) + 1/2*q^(-1)*g(-1,0,8) + 1/4*q^(-1)*J4^6*J8/(J2^4*J16^2) + J4^6/(J1^2*J2^3)",
        ),
        ("N28-8n1", "N0(2,8,8,1)", "4*q*J2^2*J4^3*J8^2/J1^6"),
        ("N28-8n3", "N0(2,8,8,3)", "J2^6*J4^5/(J1^8*J8^2)"),
        ("N28-8n5", "N0(2,8,8,5)", "J2^14*J8^2/(J1^10*J4^5)"),
        (
            "N28-8n7",
            "N0(2,8,8,7)",
            "-1/2*q^(-1) + 1/2*q^(-1)*g(-1,0,4) + 1/4*q^(-1)*J2^6*J4/(J1^4*J8^2) + 2*J2^8*J8^2/(J1^8*J4)",
        ),
        (
            "N38-2n",
            "N0(3,8,2,0)",
            "-1/4 + 1/4*g(-1,0,4) - 1/2*q^4*g(1,4,16) + 1/4*J8^7/(J4^3*J16^3) - 1/4*J2^5*J8^2/(J1^2*J4^3*J16) + 1/8*J2^6*J4/(J1^4*J8^2)",
        ),
        ("N38-4n2", "N0(3,8,4,2)", "1/2*(J2^3*J4^2/J1^4 - J4*J8/J2)"),
        (
            "N38-8n",
            "N0(3,8,8,0)",
            "-1/4 + 1/4*g(-1,0,1) - 1/2*q*g(1,1,4) + 1/8*J2^22/(J1^13*J4^8) + 2*q*J4^8/(J1^5*J2^2)",
        ),
        ("N38-8n2", "N0(3,8,8,2)", "1/2*(J2^16/(J1^11*J4^4) - J2*J4/J1)"),
        ("N38-8n4", "N0(3,8,8,4)", "J2^10/J1^9"),
        ("N38-8n6", "N0(3,8,8,6)", "2*J2^4*J4^4/J1^7"),
        (
            "N48-2n1",
            "N0(4,8,2,1)",
            "q^(-3) - q^(-3)*g(-1,0,64) - 1/2*q^(-3)*J32^6*J64/(J16^4*J128^2) + 1/4*(J2^8*J8^2/(J1^4*J4^5) - 2*J2^5*J16/(J1^2*J4^2*J8) + J4^3/J2^2) + 1/2*q*(J16^3/J8^2 - J8^8*J32^2/(J4^4*J16^5))",
        ),
        ("N48-4n1", "N0(4,8,4,1)", "1/4*(J2^9/(J1^6*J4^2) - 2*J4^4/(J2^2*J8) + J2^3/J1^2)"),
        (
            "N48-4n3",
            "N0(4,8,4,3)",
            "q^(-2) - q^(-2)*g(-1,0,32) - 1/2*q^(-2)*J16^6*J32/(J8^4*J64^2) - 1/2*J8^3/J4^2 - 1/2*J4^8*J16^2/(J2^4*J8^5) + J4^6/(J2^3*J1^2)",
        ),
        (
            "N48-8n1",
            "N0(4,8,8,1)",
            "1/4*J2^12*J4/(J1^10*J8^2) + 2*q*J2^2*J4^3*J8^2/J1^6 - 1/2*J2^4/(J1^2*J4) + 1/4*J4^5/(J1^2*J8^2)",
        ),
        (
            "N48-8n3",
            "N0(4,8,8,3)",
            "q^(-1) - q^(-1)*g(-1,0,16) - 1/2*q^(-1)*J8^6*J16/(J4^4*J32^2) - 1/2*J4^3/J2^2 - 1/2*J2^8*J8^2/(J1^4*J4^5) + J2^6*J4^5/(J1^8*J8^2)",
        ),
        ("N48-8n5", "N0(4,8,8,5)", "2*J4^9/(J1^6*J8^2)"),
        ("N48-8n7", "N0(4,8,8,7)", "2*J2^8*J8^2/(J1^8*J4)"),
    ];
    for (label, lhs, rhs) in rows {
        b.eq(
            &format!("thm-mod8/{label}"),
            lhs,
            rhs,
            &class_statement(lhs),
        );
    }
    b.eq_also(
        "thm-mod8/N38-4n",
        "N0(3,8,4,0)",
        "-1/4 + 1/4*g(-1,0,2) - 1/2*q^2*g(1,2,8) + 1/4*J4^7/(J2^3*J8^3) - 1/4*J4^7/(J2^3*J8^3) + 1/8*J2^15/(J4^6*J1^8)",
        &["-1/4 + 1/4*g(-1,0,2) - 1/2*q^2*g(1,2,8) + 1/8*J2^15/(J4^6*J1^8)"],
        &class_statement("N0(3,8,4,0)"),
    )
    .note("the two J4^7/(J2^3 J8^3) terms cancel; the reduced form is checked too");

    b.eq(
        "cor-16n/N08-16n13",
        "N0(0,8,16,13)",
        "4*(J2^25*J8^2/(J1^19*J4^7) + 2*J2^11*J4^7/(J1^15*J8^2))",
        &class_statement("N0(0,8,16,13)"),
    );
    b.eq(
        "cor-16n/N08-16n15",
        "N0(0,8,16,15)",
        "16*J2^15*J4^2/J1^16",
        &class_statement("N0(0,8,16,15)"),
    );
}

fn class_statement(lhs: &str) -> String {
    let inner = lhs.trim_start_matches("N0(").trim_end_matches(')');
    let v: Vec<&str> = inner.split(',').collect();
    let rn = if v[3] == "0" {
        format!("{}n", v[2])
    } else {
        format!("{}n+{}", v[2], v[3])
    };
    format!("generating function of N0({}, {}; {rn})", v[0], v[1])
}

fn relations(b: &mut Builder) {
    b.eq(
        "N-relation/N08-48-8n57",
        "sub(N0(0,8,8,5) - N0(4,8,8,5),2) + shift(sub(N0(0,8,8,7) - N0(4,8,8,7),2),1)",
        "0",
        "N0(0,8; 8n+r) = N0(4,8; 8n+r) for r = 5, 7",
    );
    b.eq(
        "N-relation/N18-38-8n46",
        "sub(N0(1,8,8,4) - N0(3,8,8,4),2) + shift(sub(N0(1,8,8,6) - N0(3,8,8,6),2),1)",
        "0",
        "N0(1,8; 8n+r) = N0(3,8; 8n+r) for r = 4, 6",
    );
    b.eq(
        "cor-N-relation/N04-08-8n57",
        "sub(N0(0,4,8,5) - 2*N0(0,8,8,5),2) + shift(sub(N0(0,4,8,7) - 2*N0(0,8,8,7),2),1)",
        "0",
        "N0(0,4; 8n+r) = 2 N0(0,8; 8n+r) for r = 5, 7",
    );
    b.eq(
        "cor-N-relation/N14-18-8n46",
        "sub(N0(1,4,8,4) - 2*N0(1,8,8,4),2) + shift(sub(N0(1,4,8,6) - 2*N0(1,8,8,6),2),1)",
        "0",
        "N0(1,4; 8n+r) = 2 N0(1,8; 8n+r) for r = 4, 6",
    );

    b.eq(
        "rank-differences/N08-48-8n1-diff",
        "N0(0,8,8,1) - N0(4,8,8,1)",
        "J2^4/(J1^2*J4)",
        "N0(0,8; 8n+1) - N0(4,8; 8n+1)",
    );
    b.eq(
        "rank-differences/N08-48-8n3-diff",
        "N0(0,8,8,3) - N0(4,8,8,3)",
        "J4^3/J2^2 + q*g(1,2,4)",
        "N0(0,8; 8n+3) - N0(4,8; 8n+3)",
    );
    b.eq(
        "rank-differences/N18-38-8n-diff",
        "N0(1,8,8,0) - N0(3,8,8,0)",
        "q*g(1,1,4)",
        "N0(1,8; 8n) - N0(3,8; 8n)",
    );
    b.eq(
        "rank-differences/N18-38-8n2-diff",
        "N0(1,8,8,2) - N0(3,8,8,2)",
        "J2*J4/J1",
        "N0(1,8; 8n+2) - N0(3,8; 8n+2)",
    );

    b.eq(
        "N-p-omega/N08-48-16n15-diff",
        "N0(0,8,16,11) - N0(4,8,16,11)",
        "g(1,1,2)",
        "N0(0,8; 16n+11) - N0(4,8; 16n+11) is g(q; q^2)",
    );
    b.eq(
        "N-p-omega/N-pomega-16n5",
        "shift(N0(0,8,16,11) - N0(4,8,16,11),1)",
        "pw",
        "N0(0,8; 16n-5) - N0(4,8; 16n-5) = p_omega(n) in the stated range",
    )
    .order(36, Some(36));

    b.eq(
        "chan/Chan-1",
        "N(0,4,2,0) - N(2,4,2,0)",
        "neg(N(0,8,2,0) - N(4,8,2,0))",
        "rank differences mod 4 and mod 8 at even arguments",
    )
    .order(76, Some(76));
    b.eq(
        "chan/Chan-2",
        "N(0,4,2,1) - N(2,4,2,1)",
        "neg(N(0,8,2,1) + 2*N(1,8,2,1) - 2*N(3,8,2,1) - N(4,8,2,1))",
        "rank differences mod 4 and mod 8 at odd arguments",
    )
    .order(75, Some(75))
    .note("N(1,8) enters with coefficient 2, matching N(1,8) + N(7,8)");
    b.printed(
        "chan/Chan-2-printed",
        "N(0,4,2,1) - N(2,4,2,1)",
        "neg(N(0,8,2,1) + N(1,8,2,1) - 2*N(3,8,2,1) - N(4,8,2,1))",
        "rank differences at odd arguments with coefficient 1 on N(1,8)",
    )
    .order(75, Some(75));

    for (m, r) in [(5, 4), (7, 5)] {
        let lhs: Vec<String> = (0..m)
            .map(|a| format!("shift(sub({m}*N({a},{m},{m},{r}),{m}),{a})"))
            .collect();
        let geo: Vec<String> = (0..m).map(|a| format!("q^{a}")).collect();
        b.eq(
            &format!("N-mod57/N-mod{m}"),
            &lhs.join(" + "),
            &format!("sub(dis(1/J1,{m},{r}),{m})*({})", geo.join(" + ")),
            &format!("N(a,{m}; {m}n+{r}) = p({m}n+{r})/{m} for every a"),
        )
        .order(DEFAULT_ORDER, Some(595));
    }
}

fn counting(b: &mut Builder) {
    b.eq(
        "p-omega/p-omega-g",
        "pw",
        "q*g(1,1,2)",
        "p_omega generating function is q g(q; q^2)",
    )
    .note("the q-power in front of g is required for the series to start at q^1");
    b.cong(
        "p-omega/p-omega-5",
        "pw",
        &[(40, 28), (40, 36)],
        5,
        "p_omega(40n+28), p_omega(40n+36) = 0 mod 5",
    );
    b.cong(
        "p-omega/p-omega-1",
        "pw",
        &[(8, 4)],
        4,
        "p_omega(8n+4) = 0 mod 4",
    );
    b.cong(
        "p-omega/p-omega-2",
        "pw",
        &[(8, 6)],
        8,
        "p_omega(8n+6) = 0 mod 8",
    );
    b.cong(
        "p-omega/p-omega-3",
        "pw",
        &[(16, 13)],
        4,
        "p_omega(16n+13) = 0 mod 4",
    );

    for k in 0..3u32 {
        b.eq(
            &format!("andrews/eta0-{}", 2 * k),
            &format!("eta0({})", 2 * k),
            &format!("andrews({k})"),
            &format!("odd-rank moment eta0_{} by the bilateral sum", 2 * k),
        );
    }

    b.cong("ramanujan/p-5n4", "1/J1", &[(5, 4)], 5, "p(5n+4) = 0 mod 5");
    b.cong("ramanujan/p-7n5", "1/J1", &[(7, 5)], 7, "p(7n+5) = 0 mod 7");
    b.cong(
        "ramanujan/p-11n6",
        "1/J1",
        &[(11, 6)],
        11,
        "p(11n+6) = 0 mod 11",
    );

    b.push(
        "cong-thm/Nk-2k-cong",
        Mode::HalfClassParity,
        &[],
        "N0(k,2k; n) is even for k >= 1",
    )
    .note("checked for every k and n in the odd-rank table");
    let congs: [(&str, &str, &[(i64, i64)], u64); 12] = [
        ("N04-8n57-cong", "N0(0,4,1,0)", &[(8, 5), (8, 7)], 4),
        ("N04-16n13-cong", "N0(0,4,1,0)", &[(16, 13)], 8),
        ("N14-8n4-cong", "N0(1,4,1,0)", &[(8, 4)], 2),
        ("N14-8n6-cong", "N0(1,4,1,0)", &[(8, 6)], 4),
        ("N14-mod5-cong", "N0(1,4,1,0)", &[(40, 28), (40, 36)], 5),
        ("N24-16n13-cong", "N0(2,4,1,0)", &[(16, 13)], 4),
        ("N08-8n57-cong", "N0(0,8,1,0)", &[(8, 5), (8, 7)], 2),
        ("N08-16n-13-cong", "N0(0,8,1,0)", &[(16, 13)], 4),
        ("N08-16n15-cong", "N0(0,8,1,0)", &[(16, 15)], 16),
        ("N28-8n1-mod4", "N0(2,8,1,0)", &[(8, 1)], 4),
        ("N28-16n11-cong", "N0(2,8,1,0)", &[(16, 11)], 8),
        ("N28-16n13-cong", "N0(2,8,1,0)", &[(16, 13)], 2),
    ];
    for (label, series, progs, modulus) in congs {
        let desc: Vec<String> = progs
            .iter()
            .map(|(l, r)| format!("{}; {l}n+{r})", series.trim_end_matches(",1,0)")))
            .collect();
        b.cong(
            &format!("cong-thm/{label}"),
            series,
            progs,
            modulus,
            &format!("{} = 0 mod {modulus}", desc.join(", ")),
        );
    }

    b.cong(
        "eta-conj/eta4-25n24",
        "eta(4)",
        &[(25, 24)],
        5,
        "eta_4(25n+24) = 0 mod 5",
    )
    .arg_max(299);
    b.cong(
        "eta-conj/eta6-49n47",
        "eta(6)",
        &[(49, 47)],
        7,
        "eta_6(49n+47) = 0 mod 7",
    )
    .arg_max(292);

    b.cong(
        "conj/conj-1",
        "eta0(2)",
        &[(8, 4), (8, 6)],
        2,
        "eta0_2(8n+4), eta0_2(8n+6) = 0 mod 2",
    );
    b.cong(
        "conj/conj-2",
        "eta0(4)",
        &[(16, 1), (16, 9), (16, 11), (16, 13)],
        2,
        "eta0_4(16n+r) = 0 mod 2 for r = 1, 9, 11, 13",
    );

    let d08 = "N0(0,8,1,0) - N0(4,8,1,0)";
    let d18 = "N0(1,8,1,0) - N0(3,8,1,0)";
    b.ineq(
        "rank-inequality/N08-48-8n1-ineq",
        d08,
        8,
        1,
        0,
        "N0(0,8; 8n+1) > N0(4,8; 8n+1)",
    );
    b.ineq(
        "rank-inequality/N08-48-8n3-ineq",
        d08,
        8,
        3,
        0,
        "N0(0,8; 8n+3) > N0(4,8; 8n+3)",
    );
    b.ineq(
        "rank-inequality/N18-38-8n-ineq",
        d18,
        8,
        0,
        1,
        "N0(1,8; 8n) > N0(3,8; 8n) for n >= 1",
    );
    b.ineq(
        "rank-inequality/N18-38-8n2-ineq",
        d18,
        8,
        2,
        0,
        "N0(1,8; 8n+2) > N0(3,8; 8n+2)",
    );

    b.scan(
        "conj-sec5/eta4-125n99",
        "eta(4)",
        125,
        99,
        25,
        "eta_4(125n+99) mod 25",
    );
    b.scan(
        "conj-sec5/eta4-625n224",
        "eta(4)",
        625,
        224,
        125,
        "eta_4(625n+224) mod 125",
    );
}

/// Frozen list of entry ids; changing the catalog means updating this list.
pub const MANIFEST: &[&str] = &[
    "2-dissection/J-2",
    "2-dissection/J-4",
    "2-dissection/J2",
    "2-dissection/J4",
    "N-mod57/N-mod5",
    "N-mod57/N-mod7",
    "N-p-omega/N-pomega-16n5",
    "N-p-omega/N08-48-16n15-diff",
    "N-relation/N08-48-8n57",
    "N-relation/N18-38-8n46",
    "andrews/eta0-0",
    "andrews/eta0-2",
    "andrews/eta0-4",
    "chan/Chan-1",
    "chan/Chan-2",
    "chan/Chan-2-printed",
    "cong-thm/N04-16n13-cong",
    "cong-thm/N04-8n57-cong",
    "cong-thm/N08-16n-13-cong",
    "cong-thm/N08-16n15-cong",
    "cong-thm/N08-8n57-cong",
    "cong-thm/N14-8n4-cong",
    "cong-thm/N14-8n6-cong",
    "cong-thm/N14-mod5-cong",
    "cong-thm/N24-16n13-cong",
    "cong-thm/N28-16n11-cong",
    "cong-thm/N28-16n13-cong",
    "cong-thm/N28-8n1-mod4",
    "cong-thm/Nk-2k-cong",
    "conj-sec5/eta4-125n99",
    "conj-sec5/eta4-625n224",
    "conj/conj-1",
    "conj/conj-2",
    "cor-16n/N08-16n13",
    "cor-16n/N08-16n15",
    "cor-N-relation/N04-08-8n57",
    "cor-N-relation/N14-18-8n46",
    "entry25/phi",
    "entry25/phi-2",
    "entry25/phi-negative",
    "entry25/phi-negative-2",
    "entry25/psi",
    "eta-68-cor/J-6",
    "eta-68-cor/J-8",
    "eta-conj/eta4-25n24",
    "eta-conj/eta6-49n47",
    "g-R/R0-z8-0",
    "g-R/R0-z8-1",
    "g-R/R0-z8-2",
    "g-R/R0-z8-3",
    "g-R/R0-z8-4",
    "g-R/R0-z8-5",
    "g-R/R0-z8-6",
    "g-R/R0-z8-7",
    "g-lemma/minus-q",
    "g-lemma/q",
    "g-lemma/q-q4",
    "g-lemma/zetaq",
    "g-sum-minus/i-minus",
    "g-sum-minus/i-minus-printed",
    "g-sum-minus/iq-sum",
    "g-sum-minus/izetaq-minus",
    "g-sum-minus/izetaq-sum",
    "g-sum-minus/q-minus",
    "g-sum-minus/q-sum",
    "g-sum-minus/zetaq-minus",
    "g-sum-minus/zetaq-minus-printed",
    "g-sum-minus/zetaq-sum",
    "g-sum-minus/zetaq-sum-printed",
    "g-symmetric/i-q8",
    "g-symmetric/iq-minus",
    "g-symmetric/minus-q-q8",
    "g-symmetric/q-q4",
    "g-symmetric/zetaq",
    "p-omega/p-omega-1",
    "p-omega/p-omega-2",
    "p-omega/p-omega-3",
    "p-omega/p-omega-5",
    "p-omega/p-omega-g",
    "prod/j-1-q-q2",
    "prod/j-1-q-q4",
    "prod/j-q-q2",
    "prod/j-q-q4",
    "proof/N04-middle",
    "proof/add-1",
    "proof/g-add-1",
    "proof/g-q-q2",
    "proof/q4-sum",
    "ramanujan/p-11n6",
    "ramanujan/p-5n4",
    "ramanujan/p-7n5",
    "rank-differences/N08-48-8n1-diff",
    "rank-differences/N08-48-8n3-diff",
    "rank-differences/N18-38-8n-diff",
    "rank-differences/N18-38-8n2-diff",
    "rank-gen-g/i",
    "rank-gen-g/minus-1",
    "rank-gen-g/z8",
    "rank-inequality/N08-48-8n1-ineq",
    "rank-inequality/N08-48-8n3-ineq",
    "rank-inequality/N18-38-8n-ineq",
    "rank-inequality/N18-38-8n2-ineq",
    "thm-mod2/N02-2n1",
    "thm-mod2/N02-4n1",
    "thm-mod2/N02-4n3",
    "thm-mod2/N02-8n1",
    "thm-mod2/N02-8n3",
    "thm-mod2/N02-8n5",
    "thm-mod2/N02-8n7",
    "thm-mod2/N12-2n",
    "thm-mod2/N12-4n",
    "thm-mod2/N12-4n2",
    "thm-mod2/N12-8n",
    "thm-mod2/N12-8n2",
    "thm-mod2/N12-8n4",
    "thm-mod2/N12-8n6",
    "thm-mod4/N04-2n1",
    "thm-mod4/N04-4n1",
    "thm-mod4/N04-4n3",
    "thm-mod4/N04-8n1",
    "thm-mod4/N04-8n3",
    "thm-mod4/N04-8n5",
    "thm-mod4/N04-8n7",
    "thm-mod4/N14-2n",
    "thm-mod4/N14-4n",
    "thm-mod4/N14-4n2",
    "thm-mod4/N14-8n",
    "thm-mod4/N14-8n2",
    "thm-mod4/N14-8n4",
    "thm-mod4/N14-8n6",
    "thm-mod4/N24-2n1",
    "thm-mod4/N24-4n1",
    "thm-mod4/N24-4n3",
    "thm-mod4/N24-8n1",
    "thm-mod4/N24-8n3",
    "thm-mod4/N24-8n5",
    "thm-mod4/N24-8n7",
    "thm-mod8/N08-2n1",
    "thm-mod8/N08-4n1",
    "thm-mod8/N08-4n3",
    "thm-mod8/N08-8n1",
    "thm-mod8/N08-8n3",
    "thm-mod8/N08-8n5",
    "thm-mod8/N08-8n7",
    "thm-mod8/N18-2n",
    "thm-mod8/N18-4n",
    "thm-mod8/N18-4n2",
    "thm-mod8/N18-8n",
    "thm-mod8/N18-8n2",
    "thm-mod8/N18-8n4",
    "thm-mod8/N18-8n6",
    "thm-mod8/N28-2n1",
    "thm-mod8/N28-4n1",
    "thm-mod8/N28-4n3",
    "thm-mod8/N28-8n1",
    "thm-mod8/N28-8n3",
    "thm-mod8/N28-8n5",
    "thm-mod8/N28-8n7",
    "thm-mod8/N38-2n",
    "thm-mod8/N38-4n",
    "thm-mod8/N38-4n2",
    "thm-mod8/N38-8n",
    "thm-mod8/N38-8n2",
    "thm-mod8/N38-8n4",
    "thm-mod8/N38-8n6",
    "thm-mod8/N48-2n1",
    "thm-mod8/N48-4n1",
    "thm-mod8/N48-4n3",
    "thm-mod8/N48-8n1",
    "thm-mod8/N48-8n3",
    "thm-mod8/N48-8n5",
    "thm-mod8/N48-8n7",
];
