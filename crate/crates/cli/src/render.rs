//! Mountain range output.

use std::collections::BTreeSet;
use std::fmt::Write;

use lens_contact::ext_rat::fmt_rational;
use lens_contact::tight::ShuffleClass;
use lens_contact::unknots::MountainRange;
use lens_contact::{BigRational, LensSpace};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn mountain_tsv(mr: &MountainRange) -> String {
    let mut s = String::from("rot_q\ttb_q\n");
    for (r, t) in &mr.dots {
        writeln!(s, "{}\t{}", fmt_rational(r), fmt_rational(t)).unwrap();
    }
    s
}

pub fn mountain_json(mr: &MountainRange, lens: LensSpace, ts: &ShuffleClass) -> Value {
    let pair = |(r, t): &(BigRational, BigRational)| json!({"rot_q": fmt_rational(r), "tb_q": fmt_rational(t)});
    json!({
        "lens": [lens.p(), lens.q()],
        "structure": ts.sign_string(),
        "knot": mr.knot.to_string(),
        "isotopic_to": mr.isotopic_to.map(|k| k.to_string()),
        "depth": mr.depth,
        "peaks": mr.peaks.iter().map(pair).collect::<Vec<_>>(),
        "dots": mr.dots.iter().map(pair).collect::<Vec<_>>(),
    })
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 60.0;

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite")
}

/// Dot grid with one rotation unit equal to one tb unit; rotation runs
/// left to right, tb top to bottom.
pub fn mountain_svg(mr: &MountainRange) -> String {
    let rots: Vec<f64> = mr.dots.iter().map(|(r, _)| to_f64(r)).collect();
    let tbs: Vec<f64> = mr.dots.iter().map(|(_, t)| to_f64(t)).collect();
    let (rmin, rmax) = rots.iter().fold((f64::MAX, f64::MIN), |(a, b), &x| (a.min(x), b.max(x)));
    let tmax = tbs.iter().cloned().fold(f64::MIN, f64::max);
    let tmin = tbs.iter().cloned().fold(f64::MAX, f64::min);
    let width = (rmax - rmin) * UNIT + 2.0 * MARGIN;
    let height = (tmax - tmin) * UNIT + 2.0 * MARGIN;
    let x = |r: f64| MARGIN + (r - rmin) * UNIT;
    let y = |t: f64| MARGIN + (tmax - t) * UNIT;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(s, r#"<title>{} mountain range</title>"#, mr.knot).unwrap();
    for row in mr.rows() {
        let ty = y(to_f64(&row.0));
        writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="end">{}</text>"#,
            MARGIN - 15.0,
            ty + 4.0,
            fmt_rational(&row.0)
        )
        .unwrap();
    }
    let columns: BTreeSet<&BigRational> = mr.dots.iter().map(|(r, _)| r).collect();
    for r in columns {
        writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{}</text>"#,
            x(to_f64(r)),
            MARGIN - 25.0,
            fmt_rational(r)
        )
        .unwrap();
    }
    for (r, t) in rots.iter().zip(&tbs) {
        writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, x(*r), y(*t)).unwrap();
    }
    s.push_str("</svg>\n");
    s
}
