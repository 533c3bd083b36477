//-----
//
// File: HouseCatExamples.h
//
// Description:
//
// A house cat class with a fuzzy structural component (98% of house
// cats have a front left leg) and a standalone populated object class.
//
//-----

#include <EverydayObjectDefinitions.h>

AttributeType "ExteriorColor"
(
  <SuperType val = "Qualitative"/>

  "Values"
  (
    { "White",
      "Black",
      "Brown" }
  );
);

AttributeType "StandingState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />

  "Values"
  (
    { "Standing",
      "Sitting" }
  );
);

ObjectFrameClass "HouseCatObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "house ", "house" }
    );
  );
  Dictionary
  (
    English
    (
      { "cat", "cats" }
    );
  );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  Structure // the following are components of a cat body:
  (
    ObjectFrameClass "FrontLegLeft"
    (
      <ProbabilityInStructuralParent expr = 0.98 />
      <StructureTrait val = "Compound"/>

      Dictionary ( English
        (
          { "leg",
            "legs" }
        ););

      RelationshipToParent ();
    );

    // (not shown) ObjectFrameClass "FrontLegRight"
    // (not shown) ObjectFrameClass "RearLegLeft"
    // (not shown) ObjectFrameClass "RearLegRight"
  );
);

// A standalone populated object class: describes a brown house cat
// that is in the "sitting" state.
//
PopulatedObjectClass "HouseCatBrownSitting"
(
  <StructuralParentClass ref = EverydayObjectStructuralParentClass />
  <ObjectFrameClass ref = HouseCatObjectFrameClass />

  // TwoPartAttributeCluster:
  // DimensionSetExpression:
  <DimensionSystem ref = PhysicalObjectMillimeterCoordinates />
  <Attribute ref = X-Coordinate var = x$ />
  <Attribute ref = Y-Coordinate var = y$ />
  <Attribute ref = Z-Coordinate var = z$ />
  // value attributes:
  <Attribute ref = ExteriorColor val = "Brown" />
  <Attribute ref = StandingState val = "Sitting" />
);
