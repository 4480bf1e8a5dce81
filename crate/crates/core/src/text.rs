//! Plain-text formats.
//!
//! Semigroup file:
//!
//! ```text
//! # comment
//! degree: 3
//! (1,2)(3)
//! (1,3]2]
//! 0
//! ```
//!
//! Search stream: semigroup files separated by `---` lines, ending with
//! `status: complete` or `status: truncated`.
//!
//! Presentations: `brandt { ... }`, `gt { ... }` and `group { ... }` blocks
//! of `key: value` lines, with elements in cycle-chain notation and lists
//! of elements separated by `;`.

use std::fmt::Write as _;

use crate::constructions::{BrandtPresentation, GtPresentation};
use crate::error::{Error, Result};
use crate::partial_perm::{PartialPerm, Point, PointSet};
use crate::perm_group::PermGroup;
use crate::semigroup::Semigroup;

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn parse_degree_header(line_no: usize, line: &str) -> Result<usize> {
    let value = line
        .strip_prefix("degree:")
        .ok_or_else(|| format_err(line_no, "expected 'degree: <n>'"))?
        .trim();
    match value.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format_err(line_no, format!("bad degree '{value}'"))),
    }
}

/// Reads the header and element lines of a semigroup file without checking
/// closure.
pub fn read_elements(text: &str) -> Result<(usize, Vec<PartialPerm>)> {
    let mut degree = None;
    let mut elements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => degree = Some(parse_degree_header(i + 1, line)?),
            Some(n) => elements
                .push(PartialPerm::parse(line, n).map_err(|e| format_err(i + 1, e.to_string()))?),
        }
    }
    let degree = degree.ok_or_else(|| format_err(1, "missing 'degree:' header"))?;
    Ok((degree, elements))
}

/// Reads a semigroup file; the listed elements must be closed.
pub fn read_semigroup(text: &str) -> Result<Semigroup> {
    let (_, elements) = read_elements(text)?;
    Semigroup::from_elements(elements)
}

pub fn write_semigroup(s: &Semigroup) -> String {
    s.to_file_string()
}

/// A stream of search results.
pub fn write_stream<'a>(
    semigroups: impl IntoIterator<Item = &'a Semigroup>,
    complete: bool,
) -> String {
    let mut out = String::new();
    for s in semigroups {
        out.push_str(&s.to_file_string());
        out.push_str("---\n");
    }
    let _ = writeln!(
        out,
        "status: {}",
        if complete { "complete" } else { "truncated" }
    );
    out
}

/// Parses a search stream back into its semigroups and completeness flag.
pub fn read_stream(text: &str) -> Result<(Vec<Semigroup>, bool)> {
    let mut semigroups = Vec::new();
    let mut chunk = String::new();
    let mut status = None;
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed == "---" {
            semigroups.push(read_semigroup(&chunk)?);
            chunk.clear();
        } else if let Some(value) = trimmed.strip_prefix("status:") {
            status = Some(match value.trim() {
                "complete" => true,
                "truncated" => false,
                other => return Err(format_err(i + 1, format!("unknown status '{other}'"))),
            });
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    if chunk
        .lines()
        .any(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
    {
        return Err(format_err(
            text.lines().count(),
            "semigroup block without '---'",
        ));
    }
    let status = status.ok_or_else(|| format_err(text.lines().count(), "missing status line"))?;
    Ok((semigroups, status))
}

/// A presentation block of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Brandt(BrandtPresentation),
    Gt(GtPresentation),
    Group(PermGroup),
}

impl Presentation {
    pub fn build(&self) -> Semigroup {
        match self {
            Presentation::Brandt(p) => crate::constructions::build_brandt(p),
            Presentation::Gt(p) => crate::constructions::build_gt(p),
            Presentation::Group(g) => g.to_semigroup(),
        }
    }
}

fn join_elements(elements: &[PartialPerm]) -> String {
    elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

fn join_points<'a>(points: impl IntoIterator<Item = &'a Point>) -> String {
    points
        .into_iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn line(out: &mut String, key: &str, value: &str) {
    if value.is_empty() {
        let _ = writeln!(out, "  {key}:");
    } else {
        let _ = writeln!(out, "  {key}: {value}");
    }
}

pub fn write_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    match p {
        Presentation::Brandt(b) => {
            out.push_str("brandt {\n");
            line(&mut out, "degree", &b.degree().to_string());
            let blocks: Vec<String> = b
                .blocks()
                .iter()
                .map(|blk| format!("[{}]", join_points(blk)))
                .collect();
            line(&mut out, "blocks", &blocks.join(" "));
            line(
                &mut out,
                "group-generators",
                &join_elements(b.group().generators()),
            );
            line(&mut out, "bijections", &join_elements(b.bijections()));
        }
        Presentation::Gt(g) => {
            out.push_str("gt {\n");
            line(&mut out, "degree", &g.degree().to_string());
            line(&mut out, "k", &g.k().to_string());
            let blocks: Vec<String> = g
                .blocks()
                .iter()
                .map(|blk| format!("[{}]", join_points(blk)))
                .collect();
            line(&mut out, "blocks", &blocks.join(" "));
            line(
                &mut out,
                "group-generators",
                &join_elements(g.group().generators()),
            );
            line(&mut out, "chain", &g.chain().to_string());
        }
        Presentation::Group(grp) => {
            out.push_str("group {\n");
            line(&mut out, "degree", &grp.degree().to_string());
            line(
                &mut out,
                "points",
                &format!("[{}]", join_points(grp.points())),
            );
            line(
                &mut out,
                "group-generators",
                &join_elements(grp.generators()),
            );
        }
    }
    out.push_str("}\n");
    out
}

struct Block {
    kind: String,
    start_line: usize,
    fields: Vec<(usize, String, String)>,
}

impl Block {
    fn get(&self, key: &str) -> Result<(usize, &str)> {
        self.fields
            .iter()
            .find(|(_, k, _)| k == key)
            .map(|(l, _, v)| (*l, v.as_str()))
            .ok_or_else(|| {
                format_err(
                    self.start_line,
                    format!("{} block lacks '{key}'", self.kind),
                )
            })
    }
}

fn parse_number(line: usize, value: &str) -> Result<usize> {
    value
        .trim()
        .parse()
        .map_err(|_| format_err(line, format!("expected a number, got '{value}'")))
}

fn parse_element_list(line: usize, value: &str, degree: usize) -> Result<Vec<PartialPerm>> {
    value
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| PartialPerm::parse(s, degree).map_err(|e| format_err(line, e.to_string())))
        .collect()
}

fn parse_point_lists(line: usize, value: &str) -> Result<Vec<Vec<Point>>> {
    let mut lists = Vec::new();
    let mut rest = value.trim();
    while !rest.is_empty() {
        let inner_start = rest
            .strip_prefix('[')
            .ok_or_else(|| format_err(line, "expected '['"))?;
        let end = inner_start
            .find(']')
            .ok_or_else(|| format_err(line, "unclosed '['"))?;
        let points = inner_start[..end]
            .split(',')
            .map(|p| parse_number(line, p))
            .collect::<Result<Vec<_>>>()?;
        lists.push(points);
        rest = inner_start[end + 1..].trim_start();
    }
    Ok(lists)
}

fn presentation_from_block(block: &Block) -> Result<Presentation> {
    let (l, degree) = block.get("degree")?;
    let degree = parse_number(l, degree)?;
    let wrap = |l: usize| move |e: Error| format_err(l, e.to_string());
    match block.kind.as_str() {
        "brandt" => {
            let (lb, blocks) = block.get("blocks")?;
            let blocks: Vec<PointSet> = parse_point_lists(lb, blocks)?
                .into_iter()
                .map(|b| b.into_iter().collect())
                .collect();
            let first = blocks
                .first()
                .cloned()
                .ok_or_else(|| format_err(lb, "no blocks"))?;
            let (lg, gens) = block.get("group-generators")?;
            let group = PermGroup::generate(degree, first, parse_element_list(lg, gens, degree)?)
                .map_err(wrap(lg))?;
            let (lp, bij) = block.get("bijections")?;
            let bijections = parse_element_list(lp, bij, degree)?;
            Ok(Presentation::Brandt(
                BrandtPresentation::new(degree, blocks, group, bijections)
                    .map_err(wrap(block.start_line))?,
            ))
        }
        "gt" => {
            let (lb, blocks) = block.get("blocks")?;
            let blocks = parse_point_lists(lb, blocks)?;
            let first: PointSet = blocks
                .first()
                .ok_or_else(|| format_err(lb, "no blocks"))?
                .iter()
                .copied()
                .collect();
            let (lg, gens) = block.get("group-generators")?;
            let group = PermGroup::generate(degree, first, parse_element_list(lg, gens, degree)?)
                .map_err(wrap(lg))?;
            let p = GtPresentation::new(degree, blocks, group).map_err(wrap(block.start_line))?;
            let (lk, k) = block.get("k")?;
            if parse_number(lk, k)? != p.k() {
                return Err(format_err(lk, "k does not match the number of blocks"));
            }
            if let Ok((lc, chain)) = block.get("chain") {
                let chain =
                    PartialPerm::parse(chain, degree).map_err(|e| format_err(lc, e.to_string()))?;
                if chain != p.chain() {
                    return Err(format_err(lc, "chain does not follow the block labeling"));
                }
            }
            Ok(Presentation::Gt(p))
        }
        "group" => {
            let (lp, points) = block.get("points")?;
            let points: PointSet = parse_point_lists(lp, points)?
                .into_iter()
                .flatten()
                .collect();
            let (lg, gens) = block.get("group-generators")?;
            Ok(Presentation::Group(
                PermGroup::generate(degree, points, parse_element_list(lg, gens, degree)?)
                    .map_err(wrap(lg))?,
            ))
        }
        other => Err(format_err(
            block.start_line,
            format!("unknown block kind '{other}'"),
        )),
    }
}

/// Reads every presentation block in `text`, ignoring other lines outside
/// blocks (comments, summary tables).
pub fn read_presentations(text: &str) -> Result<Vec<Presentation>> {
    let mut result = Vec::new();
    let mut current: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match current.as_mut() {
            None => {
                if let Some(kind) = line.strip_suffix('{') {
                    current = Some(Block {
                        kind: kind.trim().to_string(),
                        start_line: line_no,
                        fields: Vec::new(),
                    });
                }
            }
            Some(block) => {
                if line == "}" {
                    result.push(presentation_from_block(block)?);
                    current = None;
                } else {
                    let (key, value) = line
                        .split_once(':')
                        .ok_or_else(|| format_err(line_no, "expected 'key: value'"))?;
                    block
                        .fields
                        .push((line_no, key.trim().to_string(), value.trim().to_string()));
                }
            }
        }
    }
    if let Some(block) = current {
        return Err(format_err(block.start_line, "unterminated block"));
    }
    Ok(result)
}
