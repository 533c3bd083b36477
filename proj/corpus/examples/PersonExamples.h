//-----
//
// File: PersonExamples.h
//
// Description:
//
// A rudimentary person class with part-to-whole structure, supporting
// attribute types, derived man/boy classes and two behavior classes
// ("person hits person", "person walks").
//
//-----

#include <EverydayObjectDefinitions.h>
#include <ValueSetsAndMappings.h>

//-----
//
// ObjectFrameClass: EarthBoundObjectFrameClass
//
// Higher class for objects that implicitly use the ground as a frame
// of reference (provides orientation specifiers, e.g. "above", "below").
//
//-----
//
ObjectFrameClass "EarthBoundObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( nil );

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );
);

// A qualitative attribute type with Dictionary items which may be used
// by an NLU system:
//
AttributeType "PersonAge"
(
  <SuperType val = "Qualitative"/>

  "Values"
  (
    { "Infantile" : Dictionary ( English ( { "infant" } ) ); ,
      "YoungChild" : Dictionary ( English ( { "young" } ) ); ,
      "Child" : Dictionary ( English ( { "young" } ) ); ,
      "Teenager" : Dictionary ( English ( { "teenage" } ) ); ,
      "Adult" : Dictionary ( English ( { "adult" } ) ); ,
      "MiddleAgedAdult" : Dictionary ( English ( { "middle-aged", "adult" } ) ); ,
      "AdvancedAgedAdult" : Dictionary ( English ( { "elderly", "senior", "older", "old" } ) );
    }
  );
);

// A state attribute type that is useful for "person walks" behavior
// classes:
//
AttributeType "WalkingState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true"/>

  "Values"
  (
    { "NotWalking",
      "Walking"
    }
  );
);

AttributeType "BodyWeightAttributeType" // (pounds)
(
  <SuperType val = "Qualitative"/>

  "Values"
  (
    { 0, .. 800 }
  );
);

AttributeType "MaterialCompositionAttributeType"
(
  <SuperType val = "Qualitative"/>
  <ValueSetName ref = ChemicalCompositionValueSet/>
);

//-----
//
// ObjectFrameClass: PersonObjectFrameClass
//
//-----
//
ObjectFrameClass "PersonObjectFrameClass"
(
  <SealedClass val = "false" /> // (the default)

  <StructureTrait val = "Compound"/> // ("Compound" since it has a Structure section, below)

  <StructuralParentClass val = "false"/> // (the default)

  Dictionary
  (
    English
    (
      { "person", "persons", "human", "humans" }
    );
  );

  HigherClasses
  (
    { "EverydayObjectFrameClass",
      "EarthBoundObjectFrameClass" } // provides orientation specifiers, e.g. "above", "below"
  );

  // (a StructuralParentClassesBase section is not needed since it is
  // gotten via the inheritance hierarchy)

  AttributeTypes
  (
    AttributeType "PersonAge"
    (
      <SuperType val = "Qualitative"/>

      "Values"
      (
        { "Infantile" : Dictionary ( English ( { "infant" } ) ); ,
          "Child" : Dictionary ( English ( { "young" } ) ); ,
          "Teenager" : Dictionary ( English ( { "teenage" } ) ); ,
          "Adult" : Dictionary ( English ( { "adult" } ) ); ,
          "MiddleAgedAdult" : Dictionary ( English ( { "middle-aged", "adult" } ) ); ,
          "AdvancedAgedAdult" : Dictionary ( English ( { "elderly", "senior", "older", "old" } ) );
        }
      );
    );
    AttributeType "HittingState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotHitting",
          "Hitting"
        }
      );
    );
    AttributeType "PassiveHitState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotHit",
          "Hit"
        }
      );
    );
  );

  DimensionSystems
  (
    // A special "holder" dimension system that allows for the sub-parts
    // of the person class to be enumerated:
    //
    DimensionSystem "PersonObjectHolder"
    (
      <RoleTrait val = "Holder"/>

      LocationAttributeTypes
      (
        SpatialAttributeTypes
        (
          "RelativePlace"
          (
            <SuperType val = "LocationAttributeType"/>

            "GeneralLocationValueSet"
            (
              <SuperTypeUsage val = "LocationValues" />

              { "PersonHeadSlot", // a compartment or receptacle (i.e. a cuboid region) that can
                // be correlated with coordinates of other dimension systems,
                // e.g. the coordinate-based dimension system, below.
                "PersonBodySlot"
              }
            );
          );
        );
      );
    );

    // (note: this statement declares a local name that is defined to refer to a more-general
    // dimension system called "PhysicalObjectMillimeterCoordinates" that is part of
    // a basic definitions Star code file).
    //
    DimensionSystem "PersonPhysicalCoordinates" (PhysicalObjectMillimeterCoordinates);
  );

  AttributesSection
  (
    Attribute "MaterialComposition"
    (
      <Attribute ref = MaterialCompositionAttributeType val = "Organic" />
    );
    Attribute "BodyWeight"
    (
      <Probability expr = 0.90 />
      <Attribute ref = BodyWeightAttributeType range = { 120 .. 220 } />
    );
  );

  Structure
  (
    ObjectFrameClass "PersonHeadObjectFrameClass"
    (
      <ProbabilityInStructuralParent expr = 0.99999 />
    );
    ObjectFrameClass "PersonLeftArmObjectFrameClass"
    (
      <ProbabilityInStructuralParent expr = 0.989 />
    );
    ObjectFrameClass "PersonRightArmObjectFrameClass"
    (
      <ProbabilityInStructuralParent expr = 0.989 />
    );

    ObjectFrameClass "PersonBodyObjectFrameClass" // a part/component
    (
      Dictionary ( English
        (
          {
            "body",
            "bodies"
          }
        ););

      // HigherClasses (not needed here)

      RelationshipToParent
      (
        AtLocations
        (
          AtLocationSet
          (
            <DimensionSystem ref = PersonObjectHolder />
            <Attribute ref = RelativePlace val = "PersonBodySlot" />
          );
          AtLocationSet // placeholders:
          (
            <DimensionSystem ref = PersonPhysicalCoordinates />
            <Attribute ref = X-Coordinate val = "nil" />
            <Attribute ref = Y-Coordinate val = "nil" />
            <Attribute ref = Z-Coordinate val = "nil" />
          );
        );

        // OrientationSpecifiers // (not shown)

        OuterDimensionSystemExtents
        (
          OuterDimensionSystemExtentSet
          (
            <DimensionSystem ref = PersonPhysicalCoordinates />
            <Attribute ref = X-Coordinate val = "nil" />
            <Attribute ref = Y-Coordinate val = "nil" />
            <Attribute ref = Z-Coordinate val = "nil" />
          );
        );
      );
    ); // "PersonBodyObjectFrameClass"
  );

  BehaviorsPotentialSection
  (
    BehaviorClassDesignator // (a person can walk)
    (
      <BehaviorClassName val = "PersonWalksBehaviorClass" />
      <Probability expr = 0.8 />
    );
  );

); // "PersonObjectFrameClass"

ObjectFrameClass "ManObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "man",
      "men" }
  ););

  HigherClasses ( { "PersonObjectFrameClass" } );
);

ObjectFrameClass "BoyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "boy",
      "boys" }
  ););

  HigherClasses ( { "PersonObjectFrameClass" } );
);

//-----
//
// BehaviorClass: PersonHitsPerson
//
//   E.g.: "The man hit the woman."
//
//   Before:
//     Man-1 hits
//     Woman-1 not yet hit (by Man-1).
//   After:
//     Woman-1 has been hit.
//
//-----
//
BehaviorClass "PersonHitsPerson"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary
  (
    English
    (
      { "hit", // (infinitive/base)
        "hit", // (simple past)
        "hit", // (past participle)
        "hits", // (simple present, 3rd p.s.)
        "hitting", // (present participle)

        "punch",
        "punched",
        "punched",
        "punches",
        "punching"
      }
    );
  );

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor" // (name is descriptive only)
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = x$ />
      <Attribute ref = RelativeTime var = t$ />
      <Attribute ref = HittingState val = "Hitting" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (x$+1) />
      <Attribute ref = RelativeTime expr = t$ />
      <Attribute ref = PassiveHitState val = "NotHit" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ /> // Identity
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (x$+1) />
      <Attribute ref = RelativeTime expr = (t$+1) />
      <Attribute ref = PassiveHitState val = "Hit" />
      <Attribute ref = UniqueIdentityAttributeType expr = q$ /> // Identity
    );
  );
); // BehaviorClass "PersonHitsPerson"

//-----
//
// BehaviorClass: PersonWalksBehaviorClass
//
//-----
//
BehaviorClass "PersonWalksBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary
  (
    English
    (
      { "walk",
        "walked",
        "walked",
        "walks",
        "walking"
      }
    );
  );

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = WalkingState val = "NotWalking" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = WalkingState val = "Walking" />
    );
  );
); // BehaviorClass "PersonWalksBehaviorClass"
