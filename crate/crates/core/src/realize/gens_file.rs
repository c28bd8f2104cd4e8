use std::path::Path;

use super::perm::Perm;
use crate::error::{Error, Result};

/// Parses the generator text format: a `degree N` header, then one generator
/// per line as `N` space-separated 1-based images. `#` starts a comment.
pub fn parse_generators(text: &str, label: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let err = |message: String| Error::Parse {
            path: label.to_string(),
            line: idx + 1,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = degree else {
            let n = line
                .strip_prefix("degree")
                .and_then(|rest| rest.trim().parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| err(format!("expected \"degree N\", found {line:?}")))?;
            degree = Some(n);
            continue;
        };
        let images = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .ok()
                    .filter(|&x| x >= 1 && x as usize <= n)
                    .map(|x| x - 1)
                    .ok_or_else(|| err(format!("bad image {tok:?}; expected an integer in 1..={n}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if images.len() != n {
            return Err(err(format!("expected {n} images, found {}", images.len())));
        }
        let perm = Perm::from_images(images).map_err(|_| err("image list is not a bijection".to_string()))?;
        gens.push(perm);
    }
    let degree = degree.ok_or_else(|| Error::Parse {
        path: label.to_string(),
        line: text.lines().count().max(1),
        message: "missing \"degree N\" header".into(),
    })?;
    Ok((degree, gens))
}

pub fn read_generator_file(path: &Path) -> Result<(usize, Vec<Perm>)> {
    if !path.exists() {
        return Err(Error::MissingData(path.to_path_buf()));
    }
    let text = std::fs::read_to_string(path)?;
    parse_generators(&text, &path.display().to_string())
}
