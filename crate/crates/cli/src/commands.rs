use std::time::{Duration, Instant};

use stirbern::identities::IdentityChecker;
use stirbern::num::format_rat;
use stirbern::oracles::{self, CrossCheck};
use stirbern::sequences::{self, FaultTarget};
use stirbern::{BernoulliConvention, ExactRat, IdentityId, ReportRow, SeqCache};

use crate::args::{
    BenchArgs, ComputeArgs, FaultArg, IdentityArg, SelftestArgs, Sequence, VerifyArgs,
};
use crate::output::{Cell, Kind, OutputRecord};

/// Index whose memoized value `--inject-fault` corrupts.
const FAULT_INDEX: usize = 10;

/// A command could not run because its arguments are unusable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

pub fn compute(args: &ComputeArgs) -> Result<OutputRecord, UsageError> {
    let seq = args.sequence;
    let need_n = || {
        args.n
            .ok_or_else(|| usage(format!("{} requires --n", seq.name())))
    };
    let need_x = || {
        args.x
            .clone()
            .ok_or_else(|| usage(format!("{} requires --x", seq.name())))
    };
    let cache = SeqCache::global();

    if args.k.is_some() && seq != Sequence::Stirling {
        return Err(usage("--k only applies to stirling"));
    }
    if args.row
        && matches!(
            seq,
            Sequence::Falling | Sequence::Rising | Sequence::DoubleFactorial
        )
    {
        return Err(usage(format!("--row does not apply to {}", seq.name())));
    }
    if args.x.is_some()
        && matches!(
            seq,
            Sequence::Stirling | Sequence::Bernoulli | Sequence::Euler | Sequence::DoubleFactorial
        )
    {
        return Err(usage(format!("--x does not apply to {}", seq.name())));
    }

    let ints = |v: Vec<stirbern::ExactInt>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let rats = |v: &[ExactRat]| v.iter().map(format_rat).collect::<Vec<_>>();

    let (kind, values) = match seq {
        Sequence::Stirling => {
            let n = need_n()?;
            match (args.row, args.k) {
                (true, None) => (Kind::Row, ints(cache.stirling_row(n))),
                (false, Some(k)) => (Kind::Value, vec![cache.stirling_s1(n, k).to_string()]),
                (true, Some(_)) => return Err(usage("give either --k or --row, not both")),
                (false, None) => return Err(usage("stirling requires --k or --row")),
            }
        }
        Sequence::Bernoulli => {
            let n = need_n()?;
            if args.row {
                (Kind::Row, rats(&cache.bernoulli_prefix(n + 1)))
            } else {
                (Kind::Value, vec![format_rat(&cache.bernoulli(n))])
            }
        }
        Sequence::Euler => {
            let n = need_n()?;
            if args.row {
                (Kind::Row, ints(cache.euler_prefix(n + 1)))
            } else {
                (Kind::Value, vec![cache.euler_number(n).to_string()])
            }
        }
        Sequence::BernoulliPoly => {
            let n = need_n()?;
            match (args.row, &args.x) {
                (true, None) => (Kind::Row, rats(cache.bernoulli_poly_coeffs(n).coeffs())),
                (false, Some(x)) => (
                    Kind::Value,
                    vec![format_rat(&cache.bernoulli_poly_eval(n, x))],
                ),
                (true, Some(_)) => return Err(usage("give either --x or --row, not both")),
                (false, None) => return Err(usage("bernoulli-poly requires --x or --row")),
            }
        }
        Sequence::Falling => {
            let (x, n) = (need_x()?, need_n()?);
            (
                Kind::Value,
                vec![format_rat(&sequences::falling_factorial(&x, n))],
            )
        }
        Sequence::Rising => {
            let (x, n) = (need_x()?, need_n()?);
            (
                Kind::Value,
                vec![format_rat(&sequences::rising_factorial(&x, n))],
            )
        }
        Sequence::DoubleFactorial => {
            let n = need_n()?;
            (
                Kind::Value,
                vec![sequences::double_factorial_odd(n).to_string()],
            )
        }
    };
    Ok(OutputRecord::values(kind, seq.name(), values))
}

const REPORT_COLUMNS: [&str; 5] = ["identity", "n", "lhs", "rhs", "pass"];

fn report_cells(identity: IdentityId, row: &ReportRow) -> Vec<Cell> {
    match row {
        ReportRow::Sides(s) => vec![
            identity.as_str().into(),
            s.n.into(),
            format_rat(&s.lhs).into(),
            format_rat(&s.rhs).into(),
            s.equal.into(),
        ],
        ReportRow::Check { n, pass } => vec![
            identity.as_str().into(),
            (*n).into(),
            Cell::Null,
            Cell::Null,
            (*pass).into(),
        ],
    }
}

fn identities_for(arg: IdentityArg) -> Vec<IdentityId> {
    match arg {
        IdentityArg::First => vec![IdentityId::First],
        IdentityArg::Second => vec![IdentityId::Second],
        IdentityArg::Third => vec![IdentityId::Third],
        IdentityArg::Recur => vec![IdentityId::Recur],
        IdentityArg::Stirdef => vec![IdentityId::Stirdef],
        IdentityArg::Telescoped => vec![IdentityId::Telescoped],
        IdentityArg::Half => vec![IdentityId::Half],
        IdentityArg::Quarter => vec![IdentityId::Quarter],
        IdentityArg::All => IdentityId::ALL.to_vec(),
    }
}

fn identity_label(arg: IdentityArg) -> &'static str {
    match arg {
        IdentityArg::All => "all",
        other => identities_for(other)[0].as_str(),
    }
}

pub fn verify(args: &VerifyArgs) -> OutputRecord {
    let convention = if args.inject_fault {
        BernoulliConvention::PlusHalf
    } else {
        BernoulliConvention::MinusHalf
    };
    let cache = SeqCache::with_convention(convention);
    let checker = IdentityChecker::new(&cache);

    let mut rows = Vec::new();
    let mut all_pass = true;
    for id in identities_for(args.identity) {
        let report = checker.verify_range(id, 0, args.max_n).expect("0 <= max_n");
        all_pass &= report.all_pass;
        rows.extend(report.rows.iter().map(|r| report_cells(id, r)));
    }
    let mut record = OutputRecord::table(Kind::Report, REPORT_COLUMNS.to_vec(), rows);
    record.identity = Some(identity_label(args.identity).to_string());
    record.all_pass = Some(all_pass);
    record
}

pub struct SelftestOutcome {
    pub record: OutputRecord,
    pub checks: Vec<CrossCheck>,
}

impl SelftestOutcome {
    pub fn first_failure(&self) -> Option<&CrossCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

pub fn selftest(args: &SelftestArgs) -> Result<SelftestOutcome, stirbern::Error> {
    let cache = SeqCache::new();
    if let Some(fault) = args.inject_fault {
        let target = match fault {
            FaultArg::Bernoulli => FaultTarget::Bernoulli,
            FaultArg::Euler => FaultTarget::Euler,
            FaultArg::Stirling => FaultTarget::Stirling,
        };
        cache.inject_fault(target, FAULT_INDEX);
    }
    let checks = vec![
        oracles::cross_check_bernoulli(&cache, args.max_n),
        oracles::cross_check_euler(&cache, args.max_n)?,
        oracles::cross_check_stirling(&cache, args.max_n)?,
        oracles::cross_check_von_staudt_clausen(&cache, args.vsc_max_m),
    ];
    let rows = checks
        .iter()
        .map(|c| {
            vec![
                c.name.into(),
                c.checked.into(),
                c.first_mismatch.into(),
                c.passed().into(),
            ]
        })
        .collect();
    let mut record = OutputRecord::table(
        Kind::Report,
        vec!["check", "checked", "first_mismatch", "pass"],
        rows,
    );
    record.all_pass = Some(checks.iter().all(CrossCheck::passed));
    Ok(SelftestOutcome { record, checks })
}

#[derive(Debug, Default)]
struct Timings(Vec<Duration>);

impl Timings {
    fn time<T>(&mut self, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push(start.elapsed());
        out
    }

    fn cells(&self, task: &str, max_n: usize) -> Vec<Cell> {
        let ms: Vec<f64> = self.0.iter().map(|d| d.as_secs_f64() * 1e3).collect();
        let min = ms.iter().copied().fold(f64::INFINITY, f64::min);
        let max = ms.iter().copied().fold(0.0, f64::max);
        let mean = ms.iter().sum::<f64>() / ms.len() as f64;
        vec![
            task.into(),
            max_n.into(),
            ms.len().into(),
            Cell::Float(min),
            Cell::Float(mean),
            Cell::Float(max),
        ]
    }
}

/// Times every sequence and identity sweep up to `max_n` on a fresh cache
/// per repeat. `all_pass` is false if any recomputed value differs from the
/// reference cache or any identity fails.
pub fn bench(args: &BenchArgs) -> OutputRecord {
    let n = args.max_n;
    let reference = SeqCache::new();
    let ref_bernoulli = reference.bernoulli_prefix(n + 2);
    let ref_euler = reference.euler_prefix(n + 1);
    let ref_stirling: Vec<_> = (0..=n).map(|m| reference.stirling_row_shared(m)).collect();

    let mut stirling_t = Timings::default();
    let mut bernoulli_t = Timings::default();
    let mut euler_t = Timings::default();
    let mut identity_t: Vec<Timings> = IdentityId::ALL.iter().map(|_| Timings::default()).collect();
    let mut values_match = true;
    let mut identities_pass = true;

    for _ in 0..args.repeats {
        let cache = SeqCache::new();
        let rows: Vec<_> =
            stirling_t.time(|| (0..=n).map(|m| cache.stirling_row_shared(m)).collect());
        let b = bernoulli_t.time(|| cache.bernoulli_prefix(n + 2));
        let e = euler_t.time(|| cache.euler_prefix(n + 1));
        values_match &= rows == ref_stirling && b == ref_bernoulli && e == ref_euler;

        let checker = IdentityChecker::new(&cache);
        for (id, t) in IdentityId::ALL.iter().zip(identity_t.iter_mut()) {
            let report = t.time(|| checker.verify_range(*id, 0, n).expect("0 <= max_n"));
            identities_pass &= report.all_pass;
        }
    }

    let mut rows = vec![
        stirling_t.cells("stirling", n),
        bernoulli_t.cells("bernoulli", n),
        euler_t.cells("euler", n),
    ];
    for (id, t) in IdentityId::ALL.iter().zip(&identity_t) {
        rows.push(t.cells(&format!("verify-{}", id.as_str()), n));
    }
    let mut record = OutputRecord::table(
        Kind::Bench,
        vec!["task", "max_n", "repeats", "min_ms", "mean_ms", "max_ms"],
        rows,
    );
    record.all_pass = Some(values_match && identities_pass);
    record
}
