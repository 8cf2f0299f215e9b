mod common;

use common::*;
use surfent::bigons::{centered_continuation, MinimalBigons};
use surfent::kneading::{build_matrix, jump_at_cutting_point};
use surfent::symbolic::{Lap, LapPart, Side};
use surfent::tiling::build_ball;
use surfent::{analyze, AnalysisOptions, Error, Geometry, Letter, NotGeometric, SymbolicDynamics, Word};

fn letter(c: char) -> Letter {
    Letter::from_char(c).unwrap()
}

fn symbolic(input: &str) -> (Geometry, MinimalBigons, SymbolicDynamics) {
    let g = Geometry::new(&presentation(input)).unwrap();
    let b = g.bigons().unwrap();
    let sd = SymbolicDynamics::new(&g.order, &g.orientation, &b).unwrap();
    (g, b, sd)
}

#[test]
fn cyclic_orders_of_genus_two() {
    let (g, _, _) = symbolic(P4);
    assert_eq!(g.order.to_string(), "(a, d, C, D, c, b, A, B)");
    for input in [P5, P6, P7] {
        let (g, _, _) = symbolic(input);
        let mut values = g.order.to_ints();
        values.sort_unstable();
        assert_eq!(values, [-4, -3, -2, -1, 1, 2, 3, 4], "{input}");
    }
}

#[test]
fn p4_cutting_structure() {
    let (g, bigons, sd) = symbolic(P4);
    assert!(bigons.iter().all(|b| b.len() == 4));
    assert!(g.orientation.signs().iter().all(|&s| s == 1));
    let splits: Vec<String> = sd.splits().iter().map(|&i| g.order.letter(i).to_string()).collect();
    assert_eq!(splits, ["a", "d", "C", "D", "c", "B"]);
    assert_eq!(sd.turning_points().len(), 14);
}

#[test]
fn p3_orientations() {
    let (g, _, _) = symbolic(P3);
    let reversing: Vec<String> = (0..8)
        .filter(|&i| g.orientation.sign(i) < 0)
        .map(|i| g.order.letter(i).to_string())
        .collect();
    assert_eq!(reversing, ["c", "C", "b", "B"]);
}

#[test]
fn p3_end_images() {
    let (g, _, sd) = symbolic(P3);
    let o = &g.order;
    let at = |c| o.position(letter(c));
    // The two images of the cutting point between B and a lie in I_B and I_A.
    assert_eq!(sd.images().start[at('a')], at('B'));
    assert_eq!(sd.images().end[at('B')], at('A'));
    assert_eq!(sd.images().end[at('a')], at('b'));
    assert_eq!(sd.images().start[at('c')], at('D'));
    assert_eq!(sd.images().end[at('c')], at('b'));
}

#[test]
fn p3_itineraries_of_theta_d_bar() {
    let (g, _, sd) = symbolic(P3);
    let o = &g.order;
    let j = o.position(letter('D'));
    let labels = |side| sd.side_itinerary(j, side).unwrap().iter().map(|l| l.label(o)).collect::<Vec<_>>();
    assert_eq!(labels(Side::Minus), ["a_r", "b", "D_l", "b"]);
    assert_eq!(labels(Side::Plus), ["D_l", "b", "b", "a_r"]);
}

#[test]
fn p3_address_refinement_uses_the_next_symbol() {
    let (g, _, sd) = symbolic(P3);
    let o = &g.order;
    let d_bar = o.position(letter('D'));
    let b = o.position(letter('b'));
    assert_eq!(sd.refine_address(d_bar, b, None).unwrap(), Lap { base: d_bar, part: LapPart::Left });
    assert_eq!(sd.refine_address(b, 0, None).unwrap(), Lap::whole(b));
}

#[test]
fn p3_centered_continuation() {
    let (g, _, _) = symbolic(P3);
    let ray = centered_continuation(&Word::from_letters("abDb"), &g.order);
    assert_eq!(ray.to_string(), "abD(bCAd)^inf");
}

#[test]
fn p3_jump_degrees_stay_below_bigon_lengths() {
    let (_, bigons, sd) = symbolic(P3);
    for j in 0..8 {
        let nu = jump_at_cutting_point(&sd, j).unwrap();
        assert!(nu.degree().unwrap() < bigons.at(j).len());
    }
}

#[test]
fn table_matrix_shapes() {
    let shapes = [(TABLE_ROWS[2].0, (21, 22)), (TABLE_ROWS[4].0, (37, 38))];
    for (input, shape) in shapes {
        let (_, _, sd) = symbolic(input);
        let km = build_matrix(&sd).unwrap();
        assert_eq!((km.matrix.rows(), km.matrix.cols()), shape, "{input}");
    }
}

#[test]
fn non_geometric_message() {
    let err = analyze(&presentation(TABLE_ROWS[3].0), &AnalysisOptions::default()).unwrap_err();
    assert!(err.to_string().starts_with("The presentation is not geometric"), "{err}");
    let err = analyze(&presentation(P1), &AnalysisOptions::default()).unwrap_err();
    assert!(matches!(err, Error::NotGeometric(NotGeometric::ClosedEarly { found: 4, expected: 8 })));
}

#[test]
fn report_json_carries_exact_coefficients() {
    let options = AnalysisOptions { include_matrix: true, include_itineraries: true, ..AnalysisOptions::default() };
    let report = analyze(&presentation(P4), &options).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["root_factor"], serde_json::json!([1, -6, -6, -6, 1]));
    assert_eq!(json["matrix"]["entries"][0][0], serde_json::json!([-1, 1]));
    assert_eq!(json["cyclic_order"], serde_json::json!([1, 4, -3, -4, 3, 2, -1, -2]));
    assert_eq!(json["itineraries"].as_array().unwrap().len(), 14);
    assert!((report.lambda - report.entropy.exp()).abs() < 1e-9);
}

#[test]
fn analysis_is_deterministic() {
    let run = || {
        let mut r = analyze(&presentation(P3), &AnalysisOptions::default()).unwrap();
        r.timings = Default::default();
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn faces_spell_relators() {
    for input in [P3, P4] {
        let (g, _, _) = symbolic(input);
        let p = presentation(input);
        let mut shifts: Vec<Word> = Vec::new();
        for r in p.relators() {
            for w in [r.word().clone(), r.word().inverse()] {
                shifts.extend((0..w.len()).map(|i| w.rotated(i)));
            }
        }
        let ball = build_ball(&g.order, &g.orientation, 3).unwrap();
        for v in ball.interior_vertices() {
            for k in 0..8 {
                if let Some(face) = ball.face_word(v, k) {
                    assert!(shifts.contains(&Word::new(face)), "{input}");
                }
            }
        }
    }
}

#[test]
fn interior_degrees_and_relator_loops() {
    let (g, _, _) = symbolic(P4);
    let ball = build_ball(&g.order, &g.orientation, 2).unwrap();
    for v in ball.interior_vertices() {
        assert_eq!(ball.degree(v), 8);
    }
    for r in presentation(P4).relators() {
        assert_eq!(ball.trace_path(r.word()).unwrap(), ball.root());
    }
}

#[test]
fn sphere_sizes_respect_the_free_bound() {
    for input in [P3, P6, TABLE_ROWS[0].0] {
        let (g, _, _) = symbolic(input);
        let width = g.order.len() as u64;
        let ball = build_ball(&g.order, &g.orientation, 4).unwrap();
        let sigma = ball.sphere_sizes(4).sigma;
        assert_eq!(sigma[0], 1);
        assert_eq!(sigma[1], width);
        for (m, &s) in sigma.iter().enumerate().skip(1) {
            assert!(s <= width * (width - 1).pow(m as u32 - 1), "{input} at {m}");
        }
    }
}

#[test]
fn p3_bigon_sides_meet() {
    let (g, bigons, _) = symbolic(P3);
    let ball = build_ball(&g.order, &g.orientation, 5).unwrap();
    let left = ball.trace_path(&Word::from_letters("abDb")).unwrap();
    let right = ball.trace_path(&Word::from_letters("Dbba")).unwrap();
    assert_eq!(left, right);
    for b in bigons.iter() {
        let v = ball.trace_path(&b.left).unwrap();
        assert_eq!(ball.distance(v), Some(b.len()));
    }
}
