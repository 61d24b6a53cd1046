//! Backtracking solver for systems of pattern equations `pattern_i = target_i`.
//!
//! Every target is a concrete word. Variables are shared across equations
//! and may be pre-bound to constants. Boundaries are chosen left to right,
//! longest segment first; atoms whose variable is already bound are checked
//! from both ends of the remaining window as soon as possible.

use std::ops::ControlFlow;

use super::hashed::HashedWord;
use crate::words::{Transform, Word};

#[derive(Clone, Copy, Debug)]
struct Slot {
    src: usize,
    start: usize,
    end: usize,
    /// The value is `t(arena[src][start..end])`.
    t: Transform,
}

impl Slot {
    fn len(&self) -> usize {
        self.end - self.start
    }
}

#[derive(Clone, Debug)]
struct Var {
    palindrome: bool,
    nonempty: bool,
}

#[derive(Clone, Debug)]
struct Goal {
    atoms: Vec<(usize, Transform)>,
    target: usize,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct System {
    vars: Vec<Var>,
    initial: Vec<Option<Slot>>,
    goals: Vec<Goal>,
    arena: Vec<HashedWord>,
    infeasible: bool,
}

impl System {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_var(&mut self, palindrome: bool, nonempty: bool) -> usize {
        self.vars.push(Var {
            palindrome,
            nonempty,
        });
        self.initial.push(None);
        self.vars.len() - 1
    }

    pub fn bind(&mut self, var: usize, value: &Word) {
        let v = &self.vars[var];
        if (v.palindrome && !value.is_palindrome()) || (v.nonempty && value.is_empty()) {
            self.infeasible = true;
        }
        self.arena.push(HashedWord::new(value.letters()));
        self.initial[var] = Some(Slot {
            src: self.arena.len() - 1,
            start: 0,
            end: value.len(),
            t: Transform::Identity,
        });
    }

    pub fn add_goal(&mut self, atoms: Vec<(usize, Transform)>, target: &Word) {
        self.arena.push(HashedWord::new(target.letters()));
        self.goals.push(Goal {
            atoms,
            target: self.arena.len() - 1,
        });
    }

    /// Calls `f` with the value of every variable (`None` if it occurs in no
    /// goal and was not pre-bound), in search order, until `f` breaks.
    pub fn for_each_solution(&self, f: &mut dyn FnMut(&[Option<Word>]) -> ControlFlow<()>) {
        if self.infeasible {
            return;
        }
        let mut slots = self.initial.clone();
        if self.goals.is_empty() {
            let _ = self.emit(&slots, f);
            return;
        }
        let _ = self.enter_goal(0, &mut slots, f);
    }

    pub fn first_solution(&self) -> Option<Vec<Option<Word>>> {
        let mut out = None;
        self.for_each_solution(&mut |sol| {
            out = Some(sol.to_vec());
            ControlFlow::Break(())
        });
        out
    }

    fn emit(
        &self,
        slots: &[Option<Slot>],
        f: &mut dyn FnMut(&[Option<Word>]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let values: Vec<Option<Word>> = slots
            .iter()
            .map(|s| {
                s.map(|s| {
                    let src = &self.arena[s.src].letters[s.start..s.end];
                    s.t.apply(src)
                })
            })
            .collect();
        f(&values)
    }

    fn enter_goal(
        &self,
        g: usize,
        slots: &mut Vec<Option<Slot>>,
        f: &mut dyn FnMut(&[Option<Word>]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if g == self.goals.len() {
            return self.emit(slots, f);
        }
        let goal = &self.goals[g];
        let n = self.arena[goal.target].len();
        self.step(g, 0, 0, goal.atoms.len(), n, slots, f)
    }

    /// Does atom `(var, t)` with `var` bound match `target[pos..]`?
    fn atom_fits(&self, slot: Slot, t: Transform, target: &HashedWord, pos: usize) -> bool {
        self.arena[slot.src].equal_image(t.compose(slot.t), slot.start, slot.end, target, pos)
    }

    #[allow(clippy::too_many_arguments)]
    fn step(
        &self,
        g: usize,
        mut li: usize,
        mut lp: usize,
        mut ri: usize,
        mut rp: usize,
        slots: &mut Vec<Option<Slot>>,
        f: &mut dyn FnMut(&[Option<Word>]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let goal = &self.goals[g];
        let target = &self.arena[goal.target];
        loop {
            if li < ri {
                let (v, t) = goal.atoms[li];
                if let Some(s) = slots[v] {
                    if lp + s.len() > rp || !self.atom_fits(s, t, target, lp) {
                        return ControlFlow::Continue(());
                    }
                    lp += s.len();
                    li += 1;
                    continue;
                }
                let (v, t) = goal.atoms[ri - 1];
                if let Some(s) = slots[v] {
                    if lp + s.len() > rp || !self.atom_fits(s, t, target, rp - s.len()) {
                        return ControlFlow::Continue(());
                    }
                    rp -= s.len();
                    ri -= 1;
                    continue;
                }
            }
            break;
        }
        if li == ri {
            if lp != rp {
                return ControlFlow::Continue(());
            }
            return self.enter_goal(g + 1, slots, f);
        }

        let (v, t) = goal.atoms[li];
        let var = &self.vars[v];
        let mut copies = 0;
        let mut reserved = 0;
        for &(u, _) in &goal.atoms[li..ri] {
            if u == v {
                copies += 1;
            } else if let Some(s) = slots[u] {
                reserved += s.len();
            } else if self.vars[u].nonempty {
                reserved += 1;
            }
        }
        let window = rp - lp;
        if reserved > window {
            return ControlFlow::Continue(());
        }
        let max_len = (window - reserved) / copies;
        let min_len = usize::from(var.nonempty);
        let lengths: Box<dyn Iterator<Item = usize>> = if li + 1 == ri {
            Box::new(std::iter::once(window))
        } else {
            Box::new((min_len..=max_len).rev())
        };
        for len in lengths {
            if len < min_len || len > max_len {
                continue;
            }
            if var.palindrome && !target.pal.is_pal(lp, lp + len) {
                continue;
            }
            slots[v] = Some(Slot {
                src: goal.target,
                start: lp,
                end: lp + len,
                t,
            });
            let r = self.step(g, li + 1, lp + len, ri, rp, slots, f);
            slots[v] = None;
            r?;
        }
        ControlFlow::Continue(())
    }
}
