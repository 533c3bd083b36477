//-----
//
// File: AcquisitionClasses.h
//
// Description:
//
// Classes whose original Star language text was auto-generated from
// controlled English input: a student class, an electrician who fixes
// electrical problems, and the enclosable object / container object
// classes for the "trophy and suitcase" sentence pair.
//
//-----

#include <PersonExamples.h>

ObjectFrameClass "StudentObjectFrameClass"
(
  Dictionary ( English
    (
      { "student",
        "students" }
    );
  );
  HigherClasses ( { "PersonObjectFrameClass" } );
);

ObjectFrameClass "ElectricianObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
    (
      { "electrician",
        "electricians" }
    ););

  HigherClasses ( { "PersonObjectFrameClass" });

  AttributeTypes
  (
    AttributeType "FixingState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotFixing",
          "Fixing"
        }
      );
    );
  );
); // ObjectFrameClass "ElectricianObjectFrameClass"

ObjectFrameClass "ElectricalProblemObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "electrical",
        "electrical" }
    );
  );
  Dictionary ( English
  (
    { "problem",
      "problems" }
  ););
  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsFixedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotFixed",
          "Fixed"
        }
      );
    );
  );
);

BehaviorClass "FixesBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    { "fix", "fixed", "fixed", "fixes", "fixing" }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = ElectricianObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = FixingState val = "NotFixing" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = ElectricalProblemObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsFixedState val = "NotFixed" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = ElectricianObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = FixingState val = "Fixing" />
    );

    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = ElectricalProblemObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsFixedState val = "Fixed" />
    );
  );
); // BehaviorClass "FixesBehaviorClass"

ObjectFrameClass "EnclosableObjectObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "enclosable",
        "enclosable" }
    );
  );
  Dictionary ( English
  (
    { "object",
      "objects" }
  ););
  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "FittingState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotFitting", // e.g. not starting motion to fit into something
          "Fitting"    // e.g. in motion to fit into something
        }
      );
    );

    AttributeType "FunctionalAttributeType1"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />
      <OptionalCausalFeature val = "true" />

      "Values"
      (
        {
          "NotTooBig",
          "TooBig" : Dictionary ( English ( { "big" } ) );
        }
      );
    );
  );
); // ObjectFrameClass "EnclosableObjectObjectFrameClass"

ObjectFrameClass "TrophyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "trophy",
      "trophies" }
  ););

  HigherClasses ( { "EnclosableObjectObjectFrameClass" } );
);

ObjectFrameClass "ContainerObjectObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "container",
        "container" }
    );
  );
  Dictionary ( English
  (
    { "object",
      "objects" }
  ););
  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsFittedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotFitted",
          "Fitted"
        }
      );
    );
  );
);

ObjectFrameClass "SuitcaseObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "suitcase",
      "suitcases" }
  ););

  HigherClasses ( { "ContainerObjectObjectFrameClass" } );
);

BehaviorClass "NOT_FitBehaviorClass"
(
  <CausalRule val = "true" />
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />
  <Negation val = "true" />

  Dictionary ( English
  (
    {
      "fit",
      "fit",
      "fitted",
      "fits",
      "fitting"
    }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = EnclosableObjectObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = FittingState val = "NotFitting" />
      <Attribute ref = FunctionalAttributeType1 val = "TooBig" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = ContainerObjectObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+0) />
      <Attribute ref = PassiveIsFittedState val = "NotFitted" />
    );
  );

  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = EnclosableObjectObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = FittingState val = "Fitting" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = ContainerObjectObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsFittedState val = "Fitted" />
    );
  );
); // BehaviorClass "NOT_FitBehaviorClass"
