//! Shared hand-written fixture: two tables with a foreign key, localized
//! titles, and three users with different grant sets.

#![allow(dead_code)]

use rsp_engine::{load_fixture_text, StoreState};

pub const ADMIN: (&str, &str) = ("admin", "admin-secret");
pub const READER: (&str, &str) = ("reader", "reader-secret");
pub const WRITER: (&str, &str) = ("writer", "writer-secret");

pub fn sample_fixture_json() -> String {
    serde_json::json!({
        "DefaultLanguage": "en",
        "Tables": [
            {
                "Name": "Department",
                "SingularTitles": {"en": "Department", "cs": "Oddělení"},
                "PluralTitles": {"en": "Departments", "cs": "Oddělení"},
                "DisplayColumn": "Name",
                "Columns": [
                    {"Name": "Id", "DataType": "int", "Nullable": false, "PrimaryKey": true,
                     "AutoGenerated": true, "Editable": false,
                     "Titles": {"en": "Id"}},
                    {"Name": "Name", "DataType": "varchar", "Nullable": false, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true, "MaxLength": 30,
                     "Titles": {"en": "Name", "cs": "Název"}},
                    {"Name": "Budget", "DataType": "decimal", "Nullable": true, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true,
                     "Titles": {"en": "Budget"}}
                ],
                "Rows": [
                    ["1", "Sales", "100.50"],
                    ["2", "IT", null],
                    ["3", "HR", "7.25"]
                ]
            },
            {
                "Name": "Employee",
                "SingularTitles": {"en": "Employee", "cs": "Zaměstnanec"},
                "PluralTitles": {"en": "Employees", "cs": "Zaměstnanci"},
                "DisplayColumn": "Name",
                "Columns": [
                    {"Name": "Id", "DataType": "int", "Nullable": false, "PrimaryKey": true,
                     "AutoGenerated": true, "Editable": false,
                     "Titles": {"en": "Id"}},
                    {"Name": "Name", "DataType": "varchar", "Nullable": false, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true, "MaxLength": 40,
                     "Titles": {"en": "Name", "cs": "Jméno"}},
                    {"Name": "Age", "DataType": "int", "Nullable": true, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true,
                     "Titles": {"en": "Age"}},
                    {"Name": "DeptId", "DataType": "int", "Nullable": true, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true,
                     "References": {"Table": "Department", "Column": "Id"},
                     "Titles": {"en": "Department"}},
                    {"Name": "Hired", "DataType": "datetime", "Nullable": true, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true,
                     "Titles": {"en": "Hired"}},
                    {"Name": "Active", "DataType": "boolean", "Nullable": false, "PrimaryKey": false,
                     "AutoGenerated": false, "Editable": true,
                     "Titles": {"en": "Active"}}
                ],
                "Rows": [
                    ["1", "Ada", "31", "1", "2020-01-15T09:00:00Z", "true"],
                    ["2", "Ben", "30", null, "2021-06-01T08:30:00Z", "true"],
                    ["3", "Cyd", null, "2", null, "false"],
                    ["4", "Dee", "45", "1", "2019-03-20T10:00:00Z", "true"],
                    ["5", "Eli", "22", "2", "2023-11-05T14:45:00Z", "false"]
                ]
            }
        ],
        "Users": [
            {"UserName": "admin", "Password": "admin-secret",
             "Grants": {"Department": [1, 2, 3, 4], "Employee": [1, 2, 3, 4]}},
            {"UserName": "reader", "Password": "reader-secret",
             "Grants": {"Employee": [1]}},
            {"UserName": "writer", "Password": "writer-secret",
             "Grants": {"Employee": [1, 2]}}
        ]
    })
    .to_string()
}

pub fn sample_state() -> StoreState {
    load_fixture_text(&sample_fixture_json()).expect("sample fixture is valid")
}
