use std::collections::BTreeSet;
use std::sync::Arc;

use bs_gog::{free_reduce_signed, DeltaLetter, FreeLetter, VfStructure};
use bs_rewrite::{Alphabet, Rule, SemiThueSystem, Verdict, Word, DEFAULT_FUEL};

use crate::pda::{Pda, PdaRule};
use crate::LangError;

/// Alphabet of Δ in the order of `VfStructure::delta`.
pub fn vf_alphabet(vf: &VfStructure) -> Arc<Alphabet> {
    let names: Vec<String> = vf.delta().into_iter().map(|a| vf.name(a)).collect();
    Arc::new(Alphabet::new(&names).expect("distinct Δ names"))
}

pub fn vf_word(vf: &VfStructure, w: &[DeltaLetter]) -> Word {
    let delta = vf.delta();
    w.iter().map(|a| bs_rewrite::Letter(delta.iter().position(|d| d == a).expect("letter of Δ") as u32)).collect()
}

fn free_delta(x: FreeLetter) -> DeltaLetter {
    DeltaLetter::Free { basis: x.0, inverse: x.1 }
}

/// ab → w(a, b)·r(a, b) for all a, b in Δ, skipping rules that rewrite a word to itself.
/// Fails with the offending triple unless the system is locally confluent.
pub fn build_vf_system(vf: &VfStructure) -> Result<SemiThueSystem, LangError> {
    let alphabet = vf_alphabet(vf);
    let delta = vf.delta();
    let mut rules = Vec::new();
    for &a in &delta {
        for &b in &delta {
            let (w, r) = vf.entry(a, b);
            let mut rhs: Vec<DeltaLetter> = w.iter().map(|&x| free_delta(x)).collect();
            if r != 0 {
                rhs.push(DeltaLetter::Rep(r));
            }
            let lhs = vf_word(vf, &[a, b]);
            let rhs = vf_word(vf, &rhs);
            if lhs != rhs {
                rules.push(Rule::new(lhs, rhs));
            }
        }
    }
    let sys = SemiThueSystem::new(alphabet.clone(), rules)?;
    let name = |x: bs_rewrite::Letter| alphabet.name(x).to_string();
    match sys.check_local_confluence(DEFAULT_FUEL)? {
        Verdict::LocallyConfluent => Ok(sys),
        Verdict::CounterexamplePeak { peak, left, right } => {
            let (a, b, c) = (name(peak[0]), name(peak[1]), name(peak[peak.len() - 1]));
            Err(LangError::Table(a, b, c, format!("{} and {} do not join", alphabet.display(&left), alphabet.display(&right))))
        }
        Verdict::Unknown { fuel } => Err(LangError::Invalid(format!("confluence check ran out of fuel ({fuel} steps)"))),
    }
}

/// Deterministic push-down automaton for the word problem. The state carries the
/// current coset representative; primed states mean the stack is empty, and the
/// bottom stack symbol is primed. Each step reads one letter a, replaces the top
/// window x by the free reduction of x·w(r, a) and moves to the new representative.
pub fn vf_det_pda(vf: &VfStructure) -> Pda {
    let k = vf.reps.len();
    let nb = vf.basis.len();
    let nf = 2 * nb;
    let delta = vf.delta();
    let fidx = |x: FreeLetter| 2 * x.0 + x.1 as usize;
    let ffrom = |i: usize| (i / 2, i % 2 == 1);

    let mut states: Vec<String> = vf.reps.clone();
    states.extend(vf.reps.iter().map(|r| format!("{r}'")));
    let mut stack: Vec<String> = (0..nf).map(|i| vf.free_name(ffrom(i))).collect();
    stack.extend((0..nf).map(|i| format!("{}'", vf.free_name(ffrom(i)))));
    let primed_state = |r: usize| k + r;

    let m = (0..k)
        .flat_map(|r| delta.iter().map(move |&a| (r, a)))
        .map(|(r, a)| vf.rep_times(r, a).0.len())
        .max()
        .unwrap_or(0);

    // push y with its first symbol primed
    let bottomed = |y: &[FreeLetter]| -> Vec<usize> {
        y.iter().enumerate().map(|(i, &x)| if i == 0 { nf + fidx(x) } else { fidx(x) }).collect()
    };

    let mut rules = BTreeSet::new();
    for r in 0..k {
        for (ai, &a) in delta.iter().enumerate() {
            let (w, s) = vf.rep_times(r, a);
            // empty stack
            let (push, next) = if w.is_empty() { (vec![], primed_state(s)) } else { (bottomed(&w), s) };
            rules.insert(PdaRule { pop: vec![], state: primed_state(r), read: vec![ai], push, next });
            if m == 0 {
                continue;
            }
            // a full window of m unprimed letters
            for x in reduced_words(nb, m) {
                let mut xw = x.clone();
                xw.extend_from_slice(&w);
                let y = free_reduce_signed(&xw);
                rules.insert(PdaRule {
                    pop: x.iter().map(|&l| fidx(l)).collect(),
                    state: r,
                    read: vec![ai],
                    push: y.iter().map(|&l| fidx(l)).collect(),
                    next: s,
                });
            }
            // the whole stack, at most m letters, starting at the bottom marker
            for j in 1..=m {
                for x in reduced_words(nb, j) {
                    let mut xw = x.clone();
                    xw.extend_from_slice(&w);
                    let y = free_reduce_signed(&xw);
                    let (push, next) = if y.is_empty() { (vec![], primed_state(s)) } else { (bottomed(&y), s) };
                    rules.insert(PdaRule { pop: bottomed(&x), state: r, read: vec![ai], push, next });
                }
            }
        }
    }
    Pda {
        states,
        input: delta.iter().map(|&a| vf.name(a)).collect(),
        stack,
        rules: rules.into_iter().collect(),
        initial: primed_state(0),
        finals: BTreeSet::from([primed_state(0)]),
    }
}

/// All freely reduced words of length exactly `len` over `nb` basis letters and their inverses.
fn reduced_words(nb: usize, len: usize) -> Vec<Vec<FreeLetter>> {
    let mut out: Vec<Vec<FreeLetter>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for b in 0..nb {
                for inv in [false, true] {
                    if w.last() == Some(&(b, !inv)) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push((b, inv));
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}
