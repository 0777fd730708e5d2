use std::fmt::{self, Display};

pub const HEADER: &str = "optseq-v1";

/// One output line: `kind=<kind>` followed by `key=value` fields in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record { fields: vec![("kind".into(), kind.into())] }
    }

    pub fn field(mut self, key: &str, value: impl Display) -> Self {
        self.fields.push((key.into(), value.to_string().replace(' ', "_")));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Parses a line written by `Display`.
    pub fn parse(line: &str) -> Option<Record> {
        let fields = line
            .split(' ')
            .map(|tok| tok.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
            .collect::<Option<Vec<_>>>()?;
        (fields.first()?.0 == "kind").then_some(Record { fields })
    }
}

impl Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

pub fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let r = Record::new("oqs").field("input", "+i+").field("spectrum", join([3, 1, 1]));
        let line = r.to_string();
        assert_eq!(line, "kind=oqs input=+i+ spectrum=3,1,1");
        assert_eq!(Record::parse(&line), Some(r));
        assert_eq!(Record::new("x").field("b", join(Vec::<usize>::new())).to_string(), "kind=x b=");
    }
}
