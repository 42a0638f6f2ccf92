use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::characters::DirichletCharacter;
use crate::{Error, Result};

pub const MIN_SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroList {
    label: String,
    ordinates: Vec<f64>,
    source: String,
    complete_to: f64,
}

impl ZeroList {
    pub fn new(label: impl Into<String>, ordinates: Vec<f64>, source: impl Into<String>, complete_to: f64) -> Result<Self> {
        let label = label.into();
        for (i, &g) in ordinates.iter().enumerate() {
            if !(g.is_finite() && g > 0.0) {
                return Err(Error::InvalidArgument(format!("{label}: ordinate #{} = {g} is not positive", i + 1)));
            }
            if i > 0 && g <= ordinates[i - 1] {
                return Err(Error::InvalidArgument(format!("{label}: ordinates not strictly ascending at #{}", i + 1)));
            }
        }
        if let Some(&last) = ordinates.last() {
            if !(complete_to >= last) {
                return Err(Error::InvalidArgument(format!(
                    "{label}: complete_to = {complete_to} is below the last ordinate {last}"
                )));
            }
        }
        Ok(Self {
            label,
            ordinates,
            source: source.into(),
            complete_to,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn complete_to(&self) -> f64 {
        self.complete_to
    }

    /// Ordinates `≤ t`.
    pub fn up_to(&self, t: f64) -> &[f64] {
        &self.ordinates[..self.ordinates.partition_point(|&g| g <= t)]
    }

    /// The first `n` zeros, complete to the `n`-th ordinate.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.count());
        let complete_to = if n == self.count() {
            self.complete_to
        } else if n == 0 {
            0.0
        } else {
            self.ordinates[n - 1]
        };
        Self {
            label: self.label.clone(),
            ordinates: self.ordinates[..n].to_vec(),
            source: format!("{} (first {n})", self.source),
            complete_to,
        }
    }

    /// Serializes in the fixture format; ordinates get 17 significant digits.
    pub fn to_fixture_string(&self) -> String {
        let mut out = format!(
            "# label={}\n# source={}\n# complete_to={}\n",
            self.label, self.source, self.complete_to
        );
        for g in &self.ordinates {
            out.push_str(&format!("{g:.16e}\n"));
        }
        out
    }
}

fn significant_digits(token: &str) -> usize {
    let mantissa = token.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    digits.trim_start_matches('0').len()
}

/// Parses fixture text; `origin` names the source in error messages.
pub fn parse_zeros(text: &str, origin: &str) -> Result<ZeroList> {
    let err = |line: usize, message: String| Error::ZeroParse {
        origin: origin.to_string(),
        line,
        message,
    };
    let mut label = None;
    let mut source = String::new();
    let mut complete_to = None;
    let mut ordinates: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('#') {
            if let Some((key, value)) = header.trim().split_once('=') {
                let value = value.trim();
                match key.trim() {
                    "label" => label = Some(value.to_string()),
                    "source" => source = value.to_string(),
                    "complete_to" => {
                        complete_to = Some(
                            value
                                .parse::<f64>()
                                .map_err(|_| err(lineno, format!("bad complete_to value {value:?}")))?,
                        )
                    }
                    _ => {}
                }
            }
            continue;
        }
        let g: f64 = line
            .parse()
            .map_err(|_| err(lineno, format!("not a decimal ordinate: {line:?}")))?;
        if !(g.is_finite() && g > 0.0) {
            return Err(err(lineno, format!("ordinate {line} is not positive")));
        }
        if significant_digits(line) < MIN_SIGNIFICANT_DIGITS {
            return Err(err(
                lineno,
                format!("ordinate {line} has fewer than {MIN_SIGNIFICANT_DIGITS} significant digits"),
            ));
        }
        if let Some(&prev) = ordinates.last() {
            if g <= prev {
                return Err(err(lineno, format!("ordinate {line} does not exceed the previous one {prev}")));
            }
        }
        ordinates.push(g);
    }
    let label = label.ok_or_else(|| err(0, "missing '# label=' header".into()))?;
    let complete_to = complete_to.unwrap_or_else(|| ordinates.last().copied().unwrap_or(0.0));
    ZeroList::new(label, ordinates, source, complete_to).map_err(|e| err(0, e.to_string()))
}

pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroList> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_zeros(&text, &path.display().to_string())
}

/// Key of the zero list that serves `χ`: the label of the primitive character
/// inducing `χ`, with `zeta` for the trivial character.
pub fn zero_key(chi: &DirichletCharacter) -> String {
    let p = chi.primitive_inducing();
    if p.modulus() == 1 {
        "zeta".to_string()
    } else {
        p.label().to_string()
    }
}

/// Zero lists keyed by label.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ZeroBank {
    lists: BTreeMap<String, ZeroList>,
}

impl ZeroBank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, list: ZeroList) -> Option<ZeroList> {
        self.lists.insert(list.label.clone(), list)
    }

    /// Loads every `*.zeros` file in `dir`.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(|e| Error::io(dir, e))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "zeros"))
            .collect();
        paths.sort();
        let mut bank = Self::new();
        for p in paths {
            let list = load_zeros(&p)?;
            if bank.lists.contains_key(list.label()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate zero list label {} in {}",
                    list.label(),
                    p.display()
                )));
            }
            bank.insert(list);
        }
        Ok(bank)
    }

    pub fn get(&self, label: &str) -> Option<&ZeroList> {
        self.lists.get(label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.lists.keys().map(String::as_str)
    }

    pub fn for_character(&self, chi: &DirichletCharacter) -> Result<&ZeroList> {
        let key = zero_key(chi);
        self.lists.get(&key).ok_or(Error::MissingZeros(key))
    }

    /// Copy with every list cut to its first `n` zeros.
    pub fn truncated(&self, n: usize) -> Self {
        Self {
            lists: self.lists.iter().map(|(k, v)| (k.clone(), v.truncated(n))).collect(),
        }
    }
}
