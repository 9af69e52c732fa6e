use lattle::laws::{check_all, Status, SubsetUniverse};
use lattle::{Element, Lattice};
use serde::Serialize;

use crate::render::{labels, set_text, table, Style};

/// Everything `analyze` prints, in element order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub size: usize,
    pub elements: Vec<String>,
    pub rows: Vec<ElementRow>,
    pub dense: Vec<String>,
    pub sharp: Vec<String>,
    pub stonean: StoneanSummary,
    pub filters: Vec<FilterRow>,
    pub laws: LawSummary,
}

/// `x⁰`, `x⁰⁰`, `x̄` and `xᴰ` for one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRow {
    pub label: String,
    pub zero: Vec<String>,
    pub double_zero: Vec<String>,
    pub bar: Vec<String>,
    pub d_polar: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StoneanSummary {
    pub cond1: bool,
    pub cond2: bool,
    pub d_stonean: bool,
    pub pseudocomplemented: bool,
    pub cond1_witness: Option<[String; 2]>,
    pub cond2_witness: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterRow {
    pub generator: String,
    pub carrier: Vec<String>,
    pub c: Vec<String>,
    pub proper: bool,
    pub d_filter: bool,
    pub closed: bool,
    pub coherent: bool,
    pub maximal: bool,
    pub prime: bool,
    pub median: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawSummary {
    pub universe: String,
    pub holds: usize,
    pub fails: usize,
    pub hypothesis_never_met: usize,
    pub failing: Vec<String>,
}

impl AnalysisReport {
    pub fn new(l: &Lattice, universe: &SubsetUniverse, universe_name: &str) -> Self {
        let pair = |w: Option<(Element, Element)>| {
            w.map(|(x, y)| [l.label(x).to_string(), l.label(y).to_string()])
        };
        let rows = l
            .elements()
            .map(|x| ElementRow {
                label: l.label(x).to_string(),
                zero: labels(l, l.zero_op_elem(x)),
                double_zero: labels(l, l.double_zero(x)),
                bar: labels(l, l.bar_elem(x)),
                d_polar: labels(l, l.d_polar_elem(x)),
            })
            .collect();
        let s = l.stonean_report();
        let filters = l
            .all_filters()
            .iter()
            .map(|f| {
                let flags = l.classify(f);
                FilterRow {
                    generator: l.label(f.generator()).to_string(),
                    carrier: labels(l, f.carrier()),
                    c: labels(l, l.c_operator(f)),
                    proper: flags.proper,
                    d_filter: flags.d_filter,
                    closed: flags.closed,
                    coherent: flags.coherent,
                    maximal: flags.maximal,
                    prime: flags.prime,
                    median: flags.median,
                }
            })
            .collect();
        let verdicts = check_all(l, universe);
        let count = |st: Status| verdicts.iter().filter(|v| v.status == st).count();
        AnalysisReport {
            name: l.name().to_string(),
            size: l.len(),
            elements: l.labels().to_vec(),
            rows,
            dense: labels(l, l.dense_set()),
            sharp: labels(l, l.sharp_set()),
            stonean: StoneanSummary {
                cond1: s.cond1,
                cond2: s.cond2,
                d_stonean: s.d_stonean,
                pseudocomplemented: l.is_pseudocomplemented(),
                cond1_witness: pair(s.cond1_witness),
                cond2_witness: pair(s.cond2_witness),
            },
            filters,
            laws: LawSummary {
                universe: universe_name.to_string(),
                holds: count(Status::Holds),
                fails: count(Status::Fails),
                hypothesis_never_met: count(Status::HypothesisNeverMet),
                failing: verdicts
                    .iter()
                    .filter(|v| v.status == Status::Fails)
                    .map(|v| v.law.clone())
                    .collect(),
            },
        }
    }

    /// Generators of the closed filters, e.g. `["0", "d", "1"]`.
    pub fn closed_filters(&self) -> Vec<String> {
        self.filters
            .iter()
            .filter(|f| f.closed)
            .map(|f| f.generator.clone())
            .collect()
    }

    pub fn row(&self, label: &str) -> Option<&ElementRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn to_text(&self, style: Style) -> String {
        let mut out = format!("{} ({} elements)\n\n", style.bold(&self.name), self.size);

        let mut ops = vec![std::iter::once("x".to_string())
            .chain(self.elements.iter().cloned())
            .collect::<Vec<_>>()];
        let heads = ["x⁰", "x⁰⁰", "x̄", "xᴰ"];
        let pick: [fn(&ElementRow) -> &Vec<String>; 4] =
            [|r| &r.zero, |r| &r.double_zero, |r| &r.bar, |r| &r.d_polar];
        for (head, f) in heads.iter().zip(pick) {
            let mut row = vec![head.to_string()];
            row.extend(self.rows.iter().map(|r| set_text(f(r))));
            ops.push(row);
        }
        // The header row of this table is data, not a caption.
        out.push_str(&table(&ops, Style::default()));

        out.push('\n');
        out.push_str(&format!(
            "D  {}\nS  {}\n\n",
            set_text(&self.dense),
            set_text(&self.sharp)
        ));

        let yes = |b: bool| if b { "yes" } else { "no" };
        let witness = |w: &Option<[String; 2]>| {
            w.as_ref()
                .map(|[x, y]| format!("witness ({x}, {y})"))
                .unwrap_or_default()
        };
        let st = &self.stonean;
        let rows = vec![
            vec![
                "cond1".to_string(),
                yes(st.cond1).into(),
                witness(&st.cond1_witness),
            ],
            vec![
                "cond2".to_string(),
                yes(st.cond2).into(),
                witness(&st.cond2_witness),
            ],
            vec!["D-Stonean".to_string(), yes(st.d_stonean).into()],
            vec![
                "pseudocomplemented".to_string(),
                yes(st.pseudocomplemented).into(),
            ],
        ];
        out.push_str(&table(&rows, Style::default()));

        out.push('\n');
        let mark = |b: bool| if b { "+" } else { "-" }.to_string();
        let mut rows = vec![[
            "filter", "carrier", "c(F)", "proper", "D", "closed", "coherent", "maximal", "prime",
            "median",
        ]
        .map(String::from)
        .to_vec()];
        for f in &self.filters {
            rows.push(vec![
                format!("F_{}", f.generator),
                set_text(&f.carrier),
                set_text(&f.c),
                mark(f.proper),
                mark(f.d_filter),
                mark(f.closed),
                mark(f.coherent),
                mark(f.maximal),
                mark(f.prime),
                mark(f.median),
            ]);
        }
        out.push_str(&table(&rows, style));

        let laws = &self.laws;
        out.push_str(&format!(
            "\nlaws ({} universe): {} holds, {}, {} hypothesis_never_met\n",
            laws.universe,
            laws.holds,
            if laws.fails == 0 {
                style.good("0 fails")
            } else {
                style.bad(&format!(
                    "{} fails ({})",
                    laws.fails,
                    laws.failing.join(", ")
                ))
            },
            laws.hypothesis_never_met,
        ));
        out
    }
}
