//-----
//
// File: FarmObjects.h
//
// Description:
//
// Farmer, donkey and animal classes plus the "farmer beats donkey"
// behavior (with a nested ownership behavior reference) and a
// "person tries to kill animal" behavior with a Modification section.
//
//-----

#include <PersonExamples.h>

AttributeType "AttemptingToKillState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />

  "Values"
  (
    {
      "NotAttemptingToKill",
      "AttemptingToKill"
    }
  );
);

AttributeType "PassiveIsKilledState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />

  "Values"
  (
    {
      "NotIsKilled",
      "IsKilled"
    }
  );
);

AttributeType "OwningState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />

  "Values"
  (
    {
      "NotOwning",
      "Owning"
    }
  );
);

AttributeType "PassiveIsOwnedState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />

  "Values"
  (
    {
      "NotOwned",
      "Owned"
    }
  );
);

ObjectFrameClass "AnimalObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "animal",
      "animals" }
  ););

  HigherClasses ( { "EverydayObjectFrameClass" } );

  Structure
  (
    ObjectFrameClass "HeadObjectFrameClass"
    (
      <StructureTrait val = "Compound"/>

      Dictionary ( English
      (
        { "head",
          "heads" }
      ););

      RelationshipToParent ();
    );
  );
);

ObjectFrameClass "FarmerObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "farmer", // singular
      "farmers" } // plural
  ););

  HigherClasses ( { "PersonObjectFrameClass" });

  AttributeTypes
  (
    AttributeType "BeatingState"
    (
      <SuperType val = "Qualitative"/>

      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotBeating",
          "Beating"
        }
      );
    );
  );
);

ObjectFrameClass "DonkeyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "donkey",
      "donkeys" }
  ););

  HigherClasses ( { "AnimalObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsBeatenState"
    (
      <SuperType val = "Qualitative"/>

      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotBeaten",
          "Beaten"
        }
      );
    );
  );
);

//-----
//
// BehaviorClass: ActiveOwnershipBehaviorClass
//
// "A farmer can own a donkey." Referred to by the nested behavior
// reference within FarmerBeatsDonkeyBehaviorClass.
//
//-----
//
BehaviorClass "ActiveOwnershipBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "own",
      "owned",
      "owned",
      "owns",
      "owning"
    }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = OwningState val = "NotOwning" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = DonkeyObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsOwnedState val = "NotOwned" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = OwningState val = "Owning" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = DonkeyObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsOwnedState val = "Owned" />
    );
  );
); // BehaviorClass "ActiveOwnershipBehaviorClass"

//-----
//
// BehaviorClass: FarmerBeatsDonkeyBehaviorClass
//
// "Every farmer who owns a donkey is capable of beating it."
//
//-----
//
BehaviorClass "FarmerBeatsDonkeyBehaviorClass"
(
  <CausalRule val = "true" />

  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "beat",
      "beat",
      "beaten",
      "beats",
      "beating"
    }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = BeatingState val = "NotBeating" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = DonkeyObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsBeatenState val = "NotBeaten" />
    );
    BehaviorClassReference
    (
      <BehaviorClass ref = ActiveOwnershipBehaviorClass /> // DEFINED-BEHAVIOR-CLASS --->
      <ParameterActor ref = FarmerObjectFrameClass expr = q$ />
      <ParameterActee ref = DonkeyObjectFrameClass />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = BeatingState val = "Beating" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = DonkeyObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsBeatenState val = "Beaten" />
    );
  );
); // FarmerBeatsDonkeyBehaviorClass

//-----
//
// ObjectFrameClass: FarmerWhoBeatsHisDonkeyObjectFrameClass
//
// "Every farmer who owns a donkey beats it" as a class definition:
// the behavior is an essential feature of class members.
//
//-----
//
ObjectFrameClass "FarmerWhoBeatsHisDonkeyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "farmer",
      "farmers" }
  ););

  HigherClasses ( { "FarmerObjectFrameClass" } );

  BehaviorsActualSection
  (
    BehaviorClassDesignator
    (
      <BehaviorClassName val = "FarmerBeatsDonkeyBehaviorClass" />
      <Probability expr = 1.0 />
    );
  );
);

//-----
//
// BehaviorClass: PersonTriesToKillAnimalBehaviorClass
//
// "A person tries to kill an animal." The Modification section makes
// the modifying verb ("try") part of the lexical identity of the class.
// Since this represents "trying", the result state for the animal
// remains "NotIsKilled".
//
//-----
//
BehaviorClass "PersonTriesToKillAnimalBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "kill", "kill", "killed", "kills", "killing"
    }
  ););

  Modification
  (
    DictionaryModifyingVerbs
    (
      English
      (
        {
          "try" // infinitive
        }
      );
    );
    //DictionaryAdverbs
    //(
    //English
    //(
    // {
    //   "quickly"
    // }
    // );
    //);
  );

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = AttemptingToKillState val = "AttemptingToKill" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = AnimalObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsKilledState val = "NotIsKilled" />
    );
  );

  PostStates
  (
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = AnimalObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsKilledState val = "NotIsKilled" />
    );
  );
); // PersonTriesToKillAnimalBehaviorClass
