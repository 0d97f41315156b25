//! Environments binding spaces, generators and a braiding.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::exactmath::{Matrix, Space, TypedMorphism};

use super::braiding::{BaseCategory, BraidingProvider};
use super::eval::{check_equal, eval_expr, typecheck_expr, Equality};
use super::{parse_expr, DiagramError};

type BraidKey = (String, String, bool);

/// Spaces, generators and a braiding provider. With `reversed` set, the
/// braiding is replaced by `c̄_{X,Y} = c⁻¹_{Y,X}`.
pub struct Environment {
    spaces: BTreeMap<String, Space>,
    generators: BTreeMap<String, TypedMorphism>,
    provider: Arc<dyn BraidingProvider>,
    reversed: bool,
    default_space: Option<String>,
    braid_cache: Mutex<HashMap<BraidKey, Arc<Matrix>>>,
}

impl Clone for Environment {
    fn clone(&self) -> Self {
        Environment {
            spaces: self.spaces.clone(),
            generators: self.generators.clone(),
            provider: self.provider.clone(),
            reversed: self.reversed,
            default_space: self.default_space.clone(),
            braid_cache: Mutex::new(self.braid_cache.lock().unwrap().clone()),
        }
    }
}

impl Environment {
    pub fn new(provider: Arc<dyn BraidingProvider>) -> Self {
        Environment {
            spaces: BTreeMap::new(),
            generators: BTreeMap::new(),
            provider,
            reversed: false,
            default_space: None,
            braid_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Plain vector spaces with the flip.
    pub fn vect() -> Self {
        Environment::new(Arc::new(BaseCategory::vect()))
    }

    pub fn provider(&self) -> Arc<dyn BraidingProvider> {
        self.provider.clone()
    }

    pub fn add_space(&mut self, space: Space) {
        self.braid_cache
            .lock()
            .unwrap()
            .retain(|(x, y, _), _| *x != *space.name && *y != *space.name);
        self.spaces.insert(space.name.to_string(), space);
    }

    pub fn space(&self, name: &str) -> Result<&Space, DiagramError> {
        self.spaces
            .get(name)
            .ok_or_else(|| DiagramError::Unbound(name.to_string()))
    }

    pub fn spaces(&self) -> impl Iterator<Item = &Space> {
        self.spaces.values()
    }

    /// Binds `key` (e.g. `"mu[H]"` or `"omega"`) to a matrix typed by named spaces.
    pub fn add_generator(
        &mut self,
        key: &str,
        dom: &[&str],
        cod: &[&str],
        matrix: Arc<Matrix>,
    ) -> Result<(), DiagramError> {
        let dom = dom.iter().map(|n| self.space(n).cloned()).collect::<Result<Vec<_>, _>>()?;
        let cod = cod.iter().map(|n| self.space(n).cloned()).collect::<Result<Vec<_>, _>>()?;
        let m = TypedMorphism::from_arc(dom, cod, matrix).map_err(|e| DiagramError::ShapeMismatch {
            lhs: key.to_string(),
            rhs: e.to_string(),
        })?;
        self.generators.insert(key.to_string(), m);
        Ok(())
    }

    pub fn bind(&mut self, key: &str, m: TypedMorphism) {
        self.generators.insert(key.to_string(), m);
    }

    pub fn set_default_space(&mut self, name: &str) {
        self.default_space = Some(name.to_string());
    }

    pub fn default_space(&self) -> Option<&str> {
        self.default_space.as_deref()
    }

    pub fn set_reversed(&mut self, reversed: bool) {
        if reversed != self.reversed {
            self.braid_cache.lock().unwrap().clear();
        }
        self.reversed = reversed;
    }

    pub fn reversed(&self) -> bool {
        self.reversed
    }

    /// `braid[X,Y]: X⊗Y → Y⊗X` (`inverse = false`) or `braidinv[X,Y]: Y⊗X → X⊗Y`.
    pub fn braid_matrix(&self, x: &str, y: &str, inverse: bool) -> Result<Arc<Matrix>, DiagramError> {
        let key = (x.to_string(), y.to_string(), inverse);
        if let Some(m) = self.braid_cache.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let sx = self.space(x)?;
        let sy = self.space(y)?;
        let m = match (self.reversed, inverse) {
            (false, false) => self.provider.braid(sx, sy)?,
            (false, true) => self.provider.braid_inv(sx, sy)?,
            (true, false) => self.provider.braid_inv(sy, sx)?,
            (true, true) => self.provider.braid(sy, sx)?,
        };
        let m = Arc::new(m);
        self.braid_cache.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    /// Resolves a generator occurrence to a typed morphism.
    pub fn generator(&self, name: &str, args: &[String]) -> Result<TypedMorphism, DiagramError> {
        if name == "braid" || name == "braidinv" {
            if args.len() != 2 {
                return Err(DiagramError::Unbound(format!("{name} needs two space arguments")));
            }
            let (x, y) = (&args[0], &args[1]);
            let inverse = name == "braidinv";
            let m = self.braid_matrix(x, y, inverse)?;
            let sx = self.space(x)?.clone();
            let sy = self.space(y)?.clone();
            let (dom, cod) = if inverse {
                (vec![sy.clone(), sx.clone()], vec![sx, sy])
            } else {
                (vec![sx.clone(), sy.clone()], vec![sy, sx])
            };
            return TypedMorphism::from_arc(dom, cod, m)
                .map_err(|e| DiagramError::Braiding(e.to_string()));
        }
        let key = if args.is_empty() {
            name.to_string()
        } else {
            format!("{name}[{}]", args.join(","))
        };
        if let Some(m) = self.generators.get(&key) {
            return Ok(m.clone());
        }
        if args.is_empty() {
            if let Some(d) = &self.default_space {
                if let Some(m) = self.generators.get(&format!("{name}[{d}]")) {
                    return Ok(m.clone());
                }
            }
        }
        Err(DiagramError::Unbound(key))
    }

    pub fn eval(&self, src: &str) -> Result<TypedMorphism, DiagramError> {
        let e = parse_expr(src)?;
        let t = typecheck_expr(&e, self)?;
        Ok(eval_expr(&t, self))
    }

    pub fn equal(&self, lhs: &str, rhs: &str) -> Result<Equality, DiagramError> {
        check_equal(&parse_expr(lhs)?, &parse_expr(rhs)?, self)
    }

    /// Checks `c⁻¹_{X,Y} ∘ c_{X,Y} = id` and `c_{X,Y} ∘ c⁻¹_{X,Y} = id`.
    pub fn braiding_invertible(&self, x: &str, y: &str) -> Result<bool, DiagramError> {
        let a = self.equal(&format!("braidinv[{x},{y}] . braid[{x},{y}]"), &format!("id[{x}] * id[{y}]"))?;
        let b = self.equal(&format!("braid[{x},{y}] . braidinv[{x},{y}]"), &format!("id[{y}] * id[{x}]"))?;
        Ok(a.equal && b.equal)
    }
}
