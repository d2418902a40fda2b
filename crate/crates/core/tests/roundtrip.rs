use framebox_core::burling::{burling_abstract, realize_frames, FrameFamily};
use framebox_core::cbu::{lift_dim, BoxFamily};
use framebox_core::doc::{canonical_json, parse_box_family, parse_frame_family, BurlingDoc, GraphDoc};
use framebox_core::graph_io::{from_edge_list, from_graph6, parse_graph_auto, to_edge_list, to_graph6};
use framebox_core::shipped::{g1_boxes, g1_graph};
use framebox_core::{Graph, Scalar};

fn graphs() -> Vec<Graph> {
    let mut out = vec![Graph::empty(0), Graph::empty(1), Graph::complete(5), Graph::cycle(5), g1_graph()];
    out.extend((1..=4).map(|k| burling_abstract(k).unwrap().graph));
    out
}

#[test]
fn graph_formats_round_trip() {
    for g in graphs() {
        let g6 = to_graph6(&g);
        assert_eq!(from_graph6(&g6).unwrap(), g);
        assert_eq!(to_graph6(&from_graph6(&g6).unwrap()), g6);

        let el = to_edge_list(&g);
        assert_eq!(from_edge_list(&el).unwrap(), g);
        assert_eq!(to_edge_list(&from_edge_list(&el).unwrap()), el);

        let json = canonical_json(&GraphDoc::from_graph(&g)).unwrap();
        let back = GraphDoc::parse(&json).unwrap().to_graph().unwrap();
        assert_eq!(back, g);
        assert_eq!(canonical_json(&GraphDoc::from_graph(&back)).unwrap(), json);

        for text in [&g6, &el, &json] {
            assert_eq!(parse_graph_auto(text).unwrap(), g);
        }
    }
}

#[test]
fn families_round_trip() {
    let boxes: Vec<BoxFamily> = vec![g1_boxes(), lift_dim(&g1_boxes())];
    for f in boxes {
        let text = canonical_json(&f).unwrap();
        let back = parse_box_family(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(canonical_json(&back).unwrap(), text);
    }
    let frames: Vec<FrameFamily> = (1..=3).map(|k| realize_frames(k).unwrap()).collect();
    for f in frames {
        let text = canonical_json(&f).unwrap();
        let back = parse_frame_family(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(canonical_json(&back).unwrap(), text);
    }
}

#[test]
fn burling_documents_round_trip() {
    for k in 1..=3 {
        let doc = BurlingDoc::from_level(&burling_abstract(k).unwrap());
        let text = canonical_json(&doc).unwrap();
        let back: BurlingDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(canonical_json(&back).unwrap(), text);
    }
}

#[test]
fn scalars_round_trip_through_text() {
    for (p, q) in [(0, 1), (3, 1), (-7, 2), (1, 3), (22, -7)] {
        let s = Scalar::ratio(p, q);
        assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s);
    }
    assert_eq!(Scalar::ratio(4, 8).to_string(), "1/2");
    assert_eq!(Scalar::ratio(-6, 3).to_string(), "-2");
}
