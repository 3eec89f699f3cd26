#!/usr/bin/env python3
"""Regenerates the conformance corpus.

Builds the v1/v2 fixtures, starts the reference provider on the v1 fixture,
sends every case request, and freezes the recorded responses as
``expected.json``. Run from the repository root after ``cargo build``:

    python3 tools/generate_corpus.py

The corpus is a frozen artifact: regenerate it only when the protocol
behavior intentionally changes, and review the resulting diff.
"""

import hashlib
import json
import pathlib
import shutil
import subprocess
import sys
import urllib.request

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
BINARY = ROOT / "target" / "debug" / "rsp"

ADMIN = ("admin", "admin-secret")
READER = ("reader", "reader-secret")


def user(name, password, grants, salt):
    digest = hashlib.sha256(salt.encode() + password.encode()).hexdigest()
    return {"UserName": name, "PasswordHash": digest, "Salt": salt, "Grants": grants}


def v1_fixture():
    return {
        "DefaultLanguage": "en",
        "Tables": [
            {
                "Name": "Department",
                "SingularTitles": {"en": "Department", "cs": "Oddělení"},
                "PluralTitles": {"en": "Departments", "cs": "Oddělení"},
                "DisplayColumn": "Name",
                "Columns": [
                    {"Name": "Id", "DataType": "int", "Nullable": False,
                     "PrimaryKey": True, "AutoGenerated": True, "Editable": False,
                     "Titles": {"en": "Id"}},
                    {"Name": "Name", "DataType": "varchar", "Nullable": False,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "MaxLength": 30, "Titles": {"en": "Name", "cs": "Název"}},
                    {"Name": "Budget", "DataType": "decimal", "Nullable": True,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "Titles": {"en": "Budget"}},
                ],
                "Rows": [
                    ["1", "Sales", "100.50"],
                    ["2", "IT", None],
                    ["3", "HR", "7.25"],
                ],
            },
            {
                "Name": "Employee",
                "SingularTitles": {"en": "Employee", "cs": "Zaměstnanec"},
                "PluralTitles": {"en": "Employees", "cs": "Zaměstnanci"},
                "DisplayColumn": "Name",
                "Columns": [
                    {"Name": "Id", "DataType": "int", "Nullable": False,
                     "PrimaryKey": True, "AutoGenerated": True, "Editable": False,
                     "Titles": {"en": "Id"}},
                    {"Name": "Name", "DataType": "varchar", "Nullable": False,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "MaxLength": 40, "Titles": {"en": "Name", "cs": "Jméno"}},
                    {"Name": "Age", "DataType": "int", "Nullable": True,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "Titles": {"en": "Age"}},
                    {"Name": "DeptId", "DataType": "int", "Nullable": True,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "References": {"Table": "Department", "Column": "Id"},
                     "Titles": {"en": "Department"}},
                    {"Name": "Hired", "DataType": "datetime", "Nullable": True,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "Titles": {"en": "Hired"}},
                    {"Name": "Active", "DataType": "boolean", "Nullable": False,
                     "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                     "Titles": {"en": "Active"}},
                ],
                "Rows": [
                    ["1", "Ada", "31", "1", "2020-01-15T09:00:00Z", "true"],
                    ["2", "Ben", "30", None, "2021-06-01T08:30:00Z", "true"],
                    ["3", "Cyd", None, "2", None, "false"],
                    ["4", "Dee", "45", "1", "2019-03-20T10:00:00Z", "true"],
                    ["5", "Eli", "22", "2", "2023-11-05T14:45:00Z", "false"],
                ],
            },
        ],
        "Users": [
            user(ADMIN[0], ADMIN[1],
                 {"Department": [1, 2, 3, 4], "Employee": [1, 2, 3, 4]},
                 "5f9c1d2e8a7b4c3d"),
            user(READER[0], READER[1], {"Employee": [1]}, "0a1b2c3d4e5f6071"),
        ],
    }


def v2_fixture():
    """v1 plus a column (Employee.Email) and a table (Project)."""
    doc = v1_fixture()
    employee = doc["Tables"][1]
    employee["Columns"].append(
        {"Name": "Email", "DataType": "varchar", "Nullable": True,
         "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
         "MaxLength": 80, "Titles": {"en": "Email"}}
    )
    for row in employee["Rows"]:
        row.append(None)
    doc["Tables"].append(
        {
            "Name": "Project",
            "SingularTitles": {"en": "Project"},
            "PluralTitles": {"en": "Projects"},
            "DisplayColumn": "Title",
            "Columns": [
                {"Name": "Id", "DataType": "int", "Nullable": False,
                 "PrimaryKey": True, "AutoGenerated": True, "Editable": False,
                 "Titles": {"en": "Id"}},
                {"Name": "Title", "DataType": "varchar", "Nullable": False,
                 "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                 "MaxLength": 60, "Titles": {"en": "Title"}},
                {"Name": "DeptId", "DataType": "int", "Nullable": True,
                 "PrimaryKey": False, "AutoGenerated": False, "Editable": True,
                 "References": {"Table": "Department", "Column": "Id"},
                 "Titles": {"en": "Department"}},
            ],
            "Rows": [["1", "Migration", "2"]],
        }
    )
    for u in doc["Users"]:
        if u["UserName"] == ADMIN[0]:
            u["Grants"]["Project"] = [1, 2, 3, 4]
    return doc


def field_stub(table, name):
    """Field metadata the provider ignores beyond Table/Name."""
    return {
        "DataType": "varchar", "ID": f"{table}.{name}", "IsAutoGenerated": False,
        "IsDisplayField": False, "IsEditable": True, "IsForeignKey": False,
        "IsJoined": False, "IsNullable": True, "IsPrimaryKey": False,
        "Name": name, "Table": table, "Title": name,
    }


def creds(user_password=ADMIN):
    return {"UserName": user_password[0], "Password": user_password[1]}


def cases():
    admin = creds()
    return [
        ("01-headers-ok", "ReadTableHeaders", "exact", 200, admin),
        ("02-headers-localized", "ReadTableHeaders", "exact", 200,
         {**admin, "Language": "cs"}),
        ("03-auth-failed", "ReadTableHeaders", "exact", 401,
         {"UserName": "admin", "Password": "wrong"}),
        ("04-read-full", "ReadTable", "exact", 200,
         {**admin, "TableName": "Employee", "Skip": 0, "Take": 0}),
        ("05-read-filter-order", "ReadTable", "exact", 200,
         {**admin, "TableName": "Employee", "Skip": 0, "Take": 0,
          "FilterExpression": "Age >= 22 AND Name LIKE '%'",
          "OrderExpression": "Age DESC, Name ASC"}),
        ("06-read-pagination", "ReadTable", "exact", 200,
         {**admin, "TableName": "Employee", "Skip": 1, "Take": 2,
          "OrderExpression": "Name"}),
        ("07-read-joined-filter", "ReadTable", "exact", 200,
         {**admin, "TableName": "Employee", "Skip": 0, "Take": 0,
          "FilterExpression": "Department.Name = 'Sales'"}),
        ("08-unknown-table", "ReadTable", "exact", 404,
         {**admin, "TableName": "Nope", "Skip": 0, "Take": 0}),
        ("09-bad-expression", "ReadTable", "exact", 400,
         {**admin, "TableName": "Employee", "Skip": 0, "Take": 0,
          "FilterExpression": "Age >"}),
        ("10-forbidden-submit", "Submit", "exact", 403,
         {**creds(READER), "TableName": "Employee", "Operation": 1,
          "Fields": [field_stub("Employee", "Name")], "Data": ["Mallory"]}),
        ("11-malformed-message", "ReadTable", "fields", 400,
         {**admin, "TableName": "Employee", "Skip": 0}),
        ("12-delete-referenced", "Submit", "exact", 409,
         {**admin, "TableName": "Department", "Operation": 3,
          "Fields": [field_stub("Department", "Id")], "Data": ["1"]}),
        # Mutating pair last: the insert is undone by the delete, so the
        # corpus leaves the provider exactly where it started.
        ("13-submit-insert", "Submit", "exact", 200,
         {**admin, "TableName": "Employee", "Operation": 1,
          "Fields": [field_stub("Employee", "Name"),
                     field_stub("Employee", "Active")],
          "Data": ["Corpus", "true"]}),
        ("14-submit-delete", "Submit", "exact", 200,
         {**admin, "TableName": "Employee", "Operation": 3,
          "Fields": [field_stub("Employee", "Id")], "Data": ["6"]}),
    ]


def main():
    if not BINARY.exists():
        sys.exit("build the rsp binary first: cargo build -p rsp-cli")

    if CORPUS.exists():
        shutil.rmtree(CORPUS)
    fixtures = CORPUS / "fixtures"
    fixtures.mkdir(parents=True)
    (fixtures / "v1.json").write_text(
        json.dumps(v1_fixture(), ensure_ascii=False, indent=2) + "\n")
    (fixtures / "v2.json").write_text(
        json.dumps(v2_fixture(), ensure_ascii=False, indent=2) + "\n")

    server = subprocess.Popen(
        [str(BINARY), "serve", "--fixture", str(fixtures / "v1.json"),
         "--listen", "127.0.0.1:0"],
        stdout=subprocess.PIPE, stderr=subprocess.DEVNULL, text=True)
    try:
        addr = server.stdout.readline().strip().removeprefix("listening on ")
        base = f"http://{addr}"
        for name, endpoint, compare, expect_status, request in cases():
            case_dir = CORPUS / name
            case_dir.mkdir()
            body = json.dumps(request, ensure_ascii=False)
            (case_dir / "meta.json").write_text(json.dumps(
                {"Endpoint": endpoint, "Compare": compare,
                 "ExpectStatus": expect_status}, indent=2) + "\n")
            (case_dir / "request.json").write_text(body + "\n")

            req = urllib.request.Request(
                f"{base}/rsp/{endpoint}", data=body.encode(),
                headers={"content-type": "application/json; charset=utf-8"},
                method="POST")
            try:
                with urllib.request.urlopen(req) as resp:
                    status, text = resp.status, resp.read().decode()
            except urllib.error.HTTPError as e:
                status, text = e.code, e.read().decode()
            if status != expect_status:
                sys.exit(f"{name}: recorded status {status}, "
                         f"expected {expect_status}: {text}")
            if compare == "fields" and status == 400:
                # Freeze only the stable member; the message text is
                # implementation wording.
                text = json.dumps({"Code": json.loads(text)["Code"]})
            (case_dir / "expected.json").write_text(text + "\n")
            print(f"recorded {name}: {status}")
    finally:
        server.kill()
        server.wait()


if __name__ == "__main__":
    main()
