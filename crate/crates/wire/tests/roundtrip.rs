use rand::rngs::StdRng;
use rand::SeedableRng;

use rsp_wire::testgen;
use rsp_wire::{decode_kind, encode_message, WireError};

#[test]
fn random_messages_round_trip() {
    let mut rng = StdRng::seed_from_u64(0x5250_0001);
    for &kind in testgen::ALL_KINDS {
        for _ in 0..200 {
            let msg = testgen::message(kind, &mut rng);
            let text = encode_message(&msg).expect("generated message must encode");
            let back = decode_kind(kind, &text).expect("canonical text must decode");
            assert_eq!(msg, back, "round trip mismatch for {}", kind.as_str());
            // Determinism: identical input, identical bytes.
            assert_eq!(text, encode_message(&back).unwrap());
        }
    }
}

#[test]
fn deleting_any_required_member_breaks_decode() {
    let mut rng = StdRng::seed_from_u64(0x5250_0002);
    for &kind in testgen::ALL_KINDS {
        for path in testgen::required_member_paths(kind) {
            let msg = testgen::message(kind, &mut rng);
            let text = encode_message(&msg).unwrap();
            let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert!(
                testgen::delete_member(&mut value, &path),
                "path {path:?} missing in generated {}",
                kind.as_str()
            );
            let mutated = serde_json::to_string(&value).unwrap();
            match decode_kind(kind, &mutated) {
                Err(WireError::MalformedMessage(_)) => {}
                other => panic!(
                    "expected MalformedMessage after deleting {path:?} from {}: {other:?}",
                    kind.as_str()
                ),
            }
        }
    }
}

#[test]
fn null_cell_survives_round_trip_as_null() {
    use rsp_wire::{ReadTableResponse, TableMessage};
    let mut rng = StdRng::seed_from_u64(0x5250_0003);
    let mut table: TableMessage = match testgen::message(
        rsp_wire::MessageKind::ReadTableResponse,
        &mut rng,
    ) {
        rsp_wire::Message::ReadTableResponse(r) => r.table,
        _ => unreachable!(),
    };
    table.items[0][0] = None;
    let text = rsp_wire::encode(&ReadTableResponse { table }).unwrap();
    let back: ReadTableResponse = rsp_wire::decode(&text).unwrap();
    assert_eq!(back.table.items[0][0], None);
    assert_ne!(back.table.items[0][0], Some("null".to_string()));
    assert_ne!(back.table.items[0][0], Some(String::new()));
}

#[test]
fn malformed_json_is_rejected() {
    for text in ["", "{", "[]", "null", "\"x\"", "{\"UserName\":}"] {
        assert!(matches!(
            decode_kind(rsp_wire::MessageKind::ReadTableHeadersRequest, text),
            Err(WireError::MalformedMessage(_))
        ));
    }
}
