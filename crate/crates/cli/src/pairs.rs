//! Parsing of `Col=value` assignment arguments for `rsp submit`.
//!
//! `Col=value` sets a string value (so `Col=` is the empty string) and
//! `Col:=null` sets null — the wire format distinguishes the two, so the
//! command line must as well.

/// Returns the field-name list and the aligned data list, preserving
/// command-line order.
pub fn submit_from_pairs(pairs: &[String]) -> Result<(Vec<String>, Vec<Option<String>>), String> {
    let mut names: Vec<String> = Vec::new();
    let mut data: Vec<Option<String>> = Vec::new();
    for pair in pairs {
        let (name, value) = if let Some(name) = pair.strip_suffix(":=null") {
            (name, None)
        } else {
            match pair.split_once('=') {
                Some((name, value)) => (name, Some(value.to_string())),
                None => return Err(format!("malformed assignment {pair:?}: expected COL=VALUE")),
            }
        };
        if name.is_empty() {
            return Err(format!("malformed assignment {pair:?}: empty column name"));
        }
        if names.iter().any(|n| n == name) {
            return Err(format!("duplicate column {name:?}"));
        }
        names.push(name.to_string());
        data.push(value);
    }
    Ok((names, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn plain_pairs() {
        let (names, data) = submit_from_pairs(&strs(&["Id=3", "Name=Zoe"])).unwrap();
        assert_eq!(names, ["Id", "Name"]);
        assert_eq!(data, [Some("3".to_string()), Some("Zoe".to_string())]);
    }

    #[test]
    fn null_and_empty_are_distinct() {
        let (_, data) = submit_from_pairs(&strs(&["Dept:=null", "Note="])).unwrap();
        assert_eq!(data, [None, Some(String::new())]);
    }

    #[test]
    fn value_may_contain_equals() {
        let (_, data) = submit_from_pairs(&strs(&["Formula=a=b"])).unwrap();
        assert_eq!(data, [Some("a=b".to_string())]);
    }

    #[test]
    fn rejects_duplicates_and_malformed() {
        assert!(submit_from_pairs(&strs(&["Id=3", "Id=4"])).is_err());
        assert!(submit_from_pairs(&strs(&["NoEquals"])).is_err());
        assert!(submit_from_pairs(&strs(&["=x"])).is_err());
    }
}
