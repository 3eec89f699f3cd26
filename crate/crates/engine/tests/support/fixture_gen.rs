//! Randomized fixture generator for property-style tests: multiple tables,
//! foreign keys with display columns, valid canonical rows, one all-granted
//! user and one read-only user.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use rsp_engine::{
    load_fixture_state, FixtureColumn, FixtureDoc, FixtureReference, FixtureTable, FixtureUser,
    StoreState,
};

pub const ADMIN: (&str, &str) = ("admin", "pw");
pub const READER: (&str, &str) = ("reader", "ro");

fn titles(name: &str) -> std::collections::BTreeMap<String, String> {
    [("en".to_string(), name.to_string())].into_iter().collect()
}

fn plain_column(name: &str, data_type: &str, nullable: bool) -> FixtureColumn {
    FixtureColumn {
        name: name.into(),
        data_type: data_type.into(),
        nullable,
        primary_key: false,
        auto_generated: false,
        editable: true,
        max_length: None,
        references: None,
        titles: titles(name),
        description: None,
    }
}

fn random_cell(rng: &mut impl Rng, data_type: &str) -> String {
    match data_type {
        "int" | "long" => rng.gen_range(-500i64..500).to_string(),
        "decimal" => format!("{}.{:02}", rng.gen_range(-99i64..100), rng.gen_range(0..100)),
        "boolean" => if rng.gen_bool(0.5) { "true" } else { "false" }.into(),
        "datetime" => format!(
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
            rng.gen_range(2015..2026),
            rng.gen_range(1..=12),
            rng.gen_range(1..=28),
            rng.gen_range(0..24),
            rng.gen_range(0..60),
            rng.gen_range(0..60)
        ),
        _ => {
            const WORDS: &[&str] = &["Ada", "Ben", "Cyd", "Dee", "Eli", "Fay", "Sales", "IT", ""];
            WORDS.choose(rng).unwrap().to_string()
        }
    }
}

/// Generates a valid random fixture document. Every table has an int
/// identity key; later tables may have a foreign key into an earlier one.
pub fn random_fixture(rng: &mut impl Rng) -> FixtureDoc {
    let table_count = rng.gen_range(1..=3);
    let mut tables: Vec<FixtureTable> = Vec::new();
    for t in 0..table_count {
        let name = format!("T{t}");
        let mut columns = vec![FixtureColumn {
            name: "Id".into(),
            data_type: "int".into(),
            nullable: false,
            primary_key: true,
            auto_generated: true,
            editable: false,
            max_length: None,
            references: None,
            titles: titles("Id"),
            description: None,
        }];
        // A non-nullable varchar column doubling as the display column, so
        // a joined cell is null exactly when the foreign key is.
        columns.push(plain_column("Label", "varchar", false));
        let extra_types = ["int", "decimal", "boolean", "datetime", "text"];
        let extra_count = rng.gen_range(0..=2);
        for (i, dt) in extra_types.choose_multiple(rng, extra_count).enumerate() {
            columns.push(plain_column(&format!("X{i}"), dt, true));
        }
        // Foreign key into a random earlier table, when one exists.
        let fk_target = (t > 0 && rng.gen_bool(0.8)).then(|| format!("T{}", rng.gen_range(0..t)));
        if let Some(target) = &fk_target {
            let mut fk = plain_column("Ref", "int", true);
            fk.references = Some(FixtureReference {
                table: target.clone(),
                column: "Id".into(),
            });
            columns.push(fk);
        }
        let display = rng.gen_bool(0.8).then(|| "Label".to_string());

        let row_count = rng.gen_range(0..=12);
        let target_ids: Vec<i64> = fk_target
            .as_ref()
            .map(|target| {
                let target_table = tables.iter().find(|x| x.name == *target).unwrap();
                (1..=target_table.rows.len() as i64).collect()
            })
            .unwrap_or_default();
        let rows = (0..row_count)
            .map(|r| {
                columns
                    .iter()
                    .map(|col| {
                        if col.primary_key {
                            return Some((r + 1).to_string());
                        }
                        if col.name == "Ref" {
                            return if target_ids.is_empty() || rng.gen_bool(0.3) {
                                None
                            } else {
                                Some(target_ids.choose(rng).unwrap().to_string())
                            };
                        }
                        if col.nullable && rng.gen_bool(0.25) {
                            None
                        } else {
                            Some(random_cell(rng, &col.data_type))
                        }
                    })
                    .collect()
            })
            .collect();
        tables.push(FixtureTable {
            name: name.clone(),
            singular_titles: titles(&name),
            plural_titles: titles(&format!("{name}s")),
            description: None,
            display_column: display,
            columns,
            rows,
        });
    }
    let all_grants = tables
        .iter()
        .map(|t| (t.name.clone(), vec![1, 2, 3, 4]))
        .collect();
    let read_grants = tables.iter().map(|t| (t.name.clone(), vec![1])).collect();
    FixtureDoc {
        default_language: "en".into(),
        tables,
        users: vec![
            FixtureUser {
                user_name: ADMIN.0.into(),
                password_hash: None,
                salt: None,
                password: Some(ADMIN.1.into()),
                grants: all_grants,
            },
            FixtureUser {
                user_name: READER.0.into(),
                password_hash: None,
                salt: None,
                password: Some(READER.1.into()),
                grants: read_grants,
            },
        ],
    }
}

pub fn random_state(rng: &mut impl Rng) -> StoreState {
    load_fixture_state(&random_fixture(rng)).expect("generated fixture is valid")
}
